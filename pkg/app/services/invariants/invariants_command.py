from app.core.command_router import CommandContext, CommandRouter
from app.services.enumeration.enumeration import enumerate_elements

from .invariants import InvariantsService
from .invariants_schema import DensityReport, InvariantsReport, OpennessReport, PartitionReport, SemiprimitivityVerdict

router = CommandRouter(tags=["invariants"])
invariants_service = InvariantsService()


@router.command("density", help="A prime in every basic open of the window, or the certificate that none exists.")
def density_command(ctx: CommandContext) -> DensityReport:
    return invariants_service.density(enumerate_elements(ctx.ring, ctx.window))


@router.command("units-open", help="Whether the unit group is open, with certificate or per-generator witnesses.")
def units_open_command(ctx: CommandContext) -> OpennessReport:
    return invariants_service.units_open(enumerate_elements(ctx.ring, ctx.window))


@router.command("semiprimitive", help="Semiprimitivity, with a nonzero Jacobson radical element when it fails.")
def semiprimitive_command(ctx: CommandContext) -> SemiprimitivityVerdict:
    return invariants_service.semiprimitive(ctx.ring)


@router.command("partition", help="Window points grouped by prime support.")
def partition_command(ctx: CommandContext) -> PartitionReport:
    return invariants_service.partition(enumerate_elements(ctx.ring, ctx.window))


@router.command("report", help="Four-way equivalence, certificates and maximal closures for the ring.")
def report_command(ctx: CommandContext) -> InvariantsReport:
    return invariants_service.report(enumerate_elements(ctx.ring, ctx.window), with_oracle=ctx.with_oracle)
