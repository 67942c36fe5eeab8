from app.core.command_router import CommandContext, CommandRouter, argument
from app.services.enumeration.enumeration import enumerate_elements
from app.services.rings.literals import parse_element

from .topology import TopologyService
from .topology_schema import (
    ClosureResponse,
    CounterexampleResponse,
    GraphResponse,
    MemberResponse,
    SupportResponse,
    WitnessResponse,
)

router = CommandRouter(tags=["topology"])
topology_service = TopologyService()

ELEMENT = argument("--element", "-e", required=True, help="element literal")


@router.command("support", help="Prime classes dividing the element.", arguments=[ELEMENT])
def support_command(ctx: CommandContext, element: str) -> SupportResponse:
    return topology_service.describe_support(parse_element(ctx.ring, element))


@router.command(
    "member",
    help="Whether s lies in the basic open sigma_k.",
    arguments=[argument("--k", required=True, help="generator"), argument("--s", required=True, help="point")],
)
def member_command(ctx: CommandContext, k: str, s: str) -> MemberResponse:
    generator, point = parse_element(ctx.ring, k), parse_element(ctx.ring, s)
    return topology_service.check_member(generator, point, with_oracle=ctx.with_oracle)


@router.command("closure", help="Symbolic closure of {x} and its members in the window.", arguments=[ELEMENT])
def closure_command(ctx: CommandContext, element: str) -> ClosureResponse:
    x = parse_element(ctx.ring, element)
    return topology_service.closure(x, enumerate_elements(ctx.ring, ctx.window), with_oracle=ctx.with_oracle)


@router.command(
    "witness",
    help="A prime p with y in sigma_p but x not, when y is outside the closure of {x}.",
    arguments=[argument("--x", required=True, help="closed-up point"), argument("--y", required=True, help="candidate point")],
)
def witness_command(ctx: CommandContext, x: str, y: str) -> WitnessResponse:
    return topology_service.witness(parse_element(ctx.ring, x), parse_element(ctx.ring, y))


@router.command("graph", help="Specialization graph of the window (text, JSON adjacency or DOT).")
def graph_command(ctx: CommandContext) -> GraphResponse:
    return topology_service.graph(enumerate_elements(ctx.ring, ctx.window))


@router.command("counterexample-zx", help="2 and x: disjoint supports in Z[x] but not comaximal.")
def counterexample_command(ctx: CommandContext) -> CounterexampleResponse:
    return topology_service.counterexample()
