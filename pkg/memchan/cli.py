"""
memchan command line
Sweep, verify and figure-reproduction commands on a click group
"""

import functools
import logging
import sys
from typing import List, Optional

import click

from memchan import __version__
from memchan.config import get_config
from memchan.exceptions import (
    BadParameter, ConfigError, InvariantViolation, NoConvergence, OutputError, UnphysicalState
)
from memchan.models.channel import ChannelKind
from memchan.repositories.sweep_config_repository import SweepConfigRepository
from memchan.services.export_service import ExportService
from memchan.services.sweep_service import SweepService, figure_config
from memchan.services.verification_service import VerificationService

logger = logging.getLogger('memchan')

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_INVARIANT = 2


def handle_errors(func):
    """Map package errors onto exit codes: 1 for config/output, 2 for invariant failures"""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        ctx = click.get_current_context()
        try:
            return func(*args, **kwargs)
        except (ConfigError, OutputError, BadParameter) as e:
            logger.debug("%s failed", func.__name__, exc_info=True)
            click.echo(f"Error: {e}", err=True)
            ctx.exit(EXIT_CONFIG)
        except (InvariantViolation, UnphysicalState, NoConvergence) as e:
            logger.debug("%s failed", func.__name__, exc_info=True)
            click.echo(f"Invariant violation: {e}", err=True)
            ctx.exit(EXIT_INVARIANT)
    return wrapper


@click.group()
@click.version_option(__version__, prog_name='memchan')
@click.option('--env', 'env_name', default=None, help='Configuration name (default: $MEMCHAN_ENV or default)')
@click.option('--log-level', default=None, help='Override the log level (DEBUG, INFO, WARNING, ...)')
@click.pass_context
def cli(ctx, env_name: Optional[str], log_level: Optional[str]):
    """Two-qubit channels with memory and the entropic uncertainty relation"""
    try:
        config_class = get_config(env_name)
    except ConfigError as e:
        click.echo(f"Error: {e}", err=True)
        ctx.exit(EXIT_CONFIG)
    config_class.init_logging(log_level)
    ctx.obj = config_class


@cli.command()
@click.option('--config', 'config_path', required=True, type=click.Path(dir_okay=False),
              help='JSON sweep configuration')
@click.option('--output', 'output_path', default=None, type=click.Path(dir_okay=False),
              help='Override the configured output CSV path')
@click.option('--plot/--no-plot', default=True, help='Also write a matplotlib script next to the CSV')
@click.pass_obj
@handle_errors
def sweep(config_class, config_path: str, output_path: Optional[str], plot: bool):
    """Run one sweep and write its CSV"""
    cfg = SweepConfigRepository().load(config_path)
    records = SweepService(config_class=config_class).run(cfg)
    written = ExportService().export(records, output_path or cfg.output_path, plot=plot)
    for path in written:
        click.echo(f"Wrote {path}")


@cli.command()
@click.option('--channel', required=True, type=click.Choice([kind.value for kind in ChannelKind]),
              help='Channel to verify')
@click.option('--samples', default=None, type=click.IntRange(min=1),
              help='Random states / oracle inputs (default from configuration)')
@click.option('--seed', default=None, type=int, help='Random seed (default from configuration)')
@click.option('--steps', default=None, type=click.IntRange(min=2),
              help='D grid size for the correlation diagnostic')
@click.pass_obj
@handle_errors
def verify(config_class, channel: str, samples: Optional[int], seed: Optional[int], steps: Optional[int]):
    """Print the verification report for one channel"""
    service = VerificationService(samples, seed, steps=steps, config_class=config_class)
    report = service.verify(channel)
    click.echo(report.render(), nl=False)
    if not report.ok:
        raise InvariantViolation(f"{len(report.failures)} verification check(s) failed")


@cli.command()
@click.option('--output-dir', default=None, type=click.Path(file_okay=False),
              help='Directory for the figure CSVs and scripts (default: $MEMCHAN_OUTPUT_DIR or figures)')
@click.option('--steps', default=None, type=click.IntRange(min=2), help='D grid size (default 201)')
@click.option('--plot/--no-plot', default=True, help='Also write the plotting scripts')
@click.pass_obj
@handle_errors
def figures(config_class, output_dir: Optional[str], steps: Optional[int], plot: bool):
    """Reproduce the three built-in figure sweeps"""
    try:
        target = config_class.init_app(output_dir)
    except OSError as e:
        raise OutputError(f"Cannot create output directory: {e}") from e
    service = SweepService(config_class=config_class)
    exporter = ExportService()
    for kind in ChannelKind:
        cfg = figure_config(kind, str(target)) if steps is None else figure_config(kind, str(target), steps)
        records = service.run(cfg)
        for path in exporter.export(records, cfg.output_path, plot=plot):
            click.echo(f"Wrote {path}")


def main(args: Optional[List[str]] = None) -> int:
    """Console entry point; returns the process exit code"""
    try:
        result = cli.main(args=args, prog_name='memchan', standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return EXIT_CONFIG
    except click.Abort:
        click.echo('Aborted!', err=True)
        return EXIT_CONFIG
    return result if isinstance(result, int) else EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
