import logging
import sys
from typing import List, Optional

from app.core.command_router import CommandApp, CommandContext, argument
from app.core.config import apply_settings, load_settings, settings
from app.core.errors import MaciasError, UsageError
from app.core.logger import configure_logging
from app.services.homeo.homeo_command import router as homeo_router
from app.services.invariants.invariants_command import router as invariants_router
from app.services.rings.literals import parse_ring_spec
from app.services.rings.rings_command import router as rings_router
from app.services.topology.topology_command import router as topology_router
from app.utils.render import OUTPUT_FORMATS, render

logger = logging.getLogger("app.main")

app = CommandApp(
    prog="macias",
    description="Macias topology workbench: basic opens, closures, invariants and homeomorphisms of PID spaces.",
    global_arguments=[
        argument("--ring", "-r", default=None, help="ring spec: Z, GF(p)[x], Z[i], Z_(p), Z[1/2,3], Z[x]"),
        argument("--window", "-w", "--bound", dest="window", type=int, default=None, help="window height bound"),
        argument("--output", "-o", choices=OUTPUT_FORMATS, default="text", help="output format"),
        argument("--with-oracle", action="store_true", help="cross-check against the brute-force oracle"),
        argument("--workers", type=int, default=None, help="worker processes for window sweeps"),
        argument("--config", default=None, help="TOML settings file (default: ./macias.toml if present)"),
        argument("--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR"),
    ],
)

app.include_router(rings_router)
app.include_router(topology_router)
app.include_router(invariants_router)
app.include_router(homeo_router)


def run(argv: Optional[List[str]] = None) -> int:
    """Exit status: 0 success, 1 a report found violations, 2 usage or input error."""
    parser = app.build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        overrides = {}
        if args.workers is not None:
            overrides["WORKERS"] = args.workers
        if args.log_level is not None:
            overrides["LOG_LEVEL"] = args.log_level
        apply_settings(load_settings(args.config, **overrides))
        if args.window is not None and args.window < 1:
            raise UsageError(f"--window must be a positive bound, got {args.window}")
        configure_logging(settings.LOG_LEVEL)

        ctx = CommandContext(
            ring=parse_ring_spec(args.ring or settings.DEFAULT_RING),
            window=settings.DEFAULT_WINDOW if args.window is None else args.window,
            output=args.output,
            with_oracle=args.with_oracle,
            workers=settings.WORKERS,
        )
        command = app.commands[args._command]
        logger.debug(f"Running {command.name} on {ctx.ring} (window {ctx.window})")
        response = command.handler(ctx, **app.command_arguments(command.name, args))
        print(render(response, ctx.output))
    except MaciasError as exc:
        print(f"error [{exc.code}]: {exc.message}", file=sys.stderr)
        return 2

    violations = response.violation_count()
    if violations:
        logger.info(f"{command.name}: {violations} violations")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(run())
