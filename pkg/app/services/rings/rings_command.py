from app.core.command_router import CommandContext, CommandRouter, argument
from app.services.oracle.oracle import OracleService

from .literals import parse_element
from .rings import RingsService
from .rings_schema import FactorResponse, RingInfoResponse

router = CommandRouter(tags=["rings"])
rings_service = RingsService(oracle=OracleService())

ELEMENT = argument("--element", "-e", required=True, help="element literal, e.g. 12, x^2+1, 1+2i, 50/3")


@router.command("ring-info", help="Unit and prime cardinals of the ring, with the first prime classes.")
def ring_info(ctx: CommandContext) -> RingInfoResponse:
    return rings_service.info(ctx.ring)


@router.command("factor", help="Unit times prime powers, primes in enumeration order.", arguments=[ELEMENT])
def factor_command(ctx: CommandContext, element: str) -> FactorResponse:
    return rings_service.factor(parse_element(ctx.ring, element), with_oracle=ctx.with_oracle)
