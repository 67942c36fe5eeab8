from app.core.command_router import CommandContext, CommandRouter, argument
from app.services.rings.literals import parse_element, parse_ring_spec

from .homeo import HomeoService
from .homeo_schema import CertificateReport, ClassifyResponse, HomeoMapResponse, VerificationReport

router = CommandRouter(tags=["homeo"])
homeo_service = HomeoService()

SOURCE = argument("--from", dest="source", required=True, help="source ring spec")
TARGET = argument("--to", dest="target", required=True, help="target ring spec")


@router.command("classify", help="Homeomorphic iff the unit and prime cardinals agree.", arguments=[SOURCE, TARGET])
def classify_command(ctx: CommandContext, source: str, target: str) -> ClassifyResponse:
    return homeo_service.classify(parse_ring_spec(source), parse_ring_spec(target))


@router.command(
    "homeo-map",
    help="Image of an element under the constructed homeomorphism.",
    arguments=[
        SOURCE,
        TARGET,
        argument("--element", "-e", required=True, help="element literal (of the target ring with --inverse)"),
        argument("--inverse", action="store_true", help="apply the inverse map, from --to back to --from"),
    ],
)
def homeo_map_command(ctx: CommandContext, source: str, target: str, element: str, inverse: bool) -> HomeoMapResponse:
    source_id, target_id = parse_ring_spec(source), parse_ring_spec(target)
    x = parse_element(target_id if inverse else source_id, element)
    return homeo_service.map_element(source_id, target_id, x, inverse=inverse)


@router.command(
    "homeo-verify",
    help="Check the homeomorphism on every point and ordered pair of the source window.",
    arguments=[SOURCE, TARGET],
)
def homeo_verify_command(ctx: CommandContext, source: str, target: str) -> VerificationReport:
    return homeo_service.verify(parse_ring_spec(source), parse_ring_spec(target), ctx.window)


@router.command(
    "certificate",
    help="Window evidence that two spaces are not homeomorphic.",
    arguments=[
        SOURCE,
        TARGET,
        argument("--target-window", type=int, default=None, help="window bound for the target ring (default: --window)"),
    ],
)
def certificate_command(ctx: CommandContext, source: str, target: str, target_window: int) -> CertificateReport:
    return homeo_service.certificate(parse_ring_spec(source), parse_ring_spec(target), ctx.window, target_window)
