"""
Export service
Writes sweep CSVs and renders standalone matplotlib scripts for them
"""

import logging
import pprint
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from jinja2 import Environment, FileSystemLoader, StrictUndefined

from memchan import __version__
from memchan.exceptions import BadParameter
from memchan.models.channel import ChannelKind
from memchan.models.record import SweepRecord
from memchan.repositories.base_repository import PathLike
from memchan.repositories.record_repository import RecordRepository

logger = logging.getLogger(__name__)

TEMPLATE_DIR = Path(__file__).resolve().parent.parent / 'templates'

Panel = Tuple[str, str, List[Tuple[str, str, str]]]


def _panels(kind: ChannelKind) -> List[Panel]:
    if kind is ChannelKind.AMPLITUDE_DAMPING:
        return [
            ('Entropic uncertainty', 'bits', [('lhs', '-', 'LH')]),
            ('Lower bound', 'bits', [('rhs', '--', 'RH')]),
            ('Purity', 'Tr(rho^2)', [('purity', '-', 'P')]),
        ]
    return [
        ('Uncertainty and bound', 'bits', [('lhs', '-', 'LH'), ('rhs', '--', 'RH')]),
        ('Purity', 'Tr(rho^2)', [('purity', '-', 'P')]),
    ]


class ExportService:
    """Service for writing sweep results and their plot scripts"""

    def __init__(self, record_repository: Optional[RecordRepository] = None):
        self.record_repository = record_repository or RecordRepository()
        self.env = Environment(loader=FileSystemLoader(str(TEMPLATE_DIR)),
                               keep_trailing_newline=True,
                               undefined=StrictUndefined)

    def write_csv(self, records: Sequence[SweepRecord], path: PathLike) -> None:
        self.record_repository.write_csv(records, path)

    def render_plot_script(self, records: Sequence[SweepRecord], csv_name: str) -> str:
        """Plot script source for records stored in csv_name (next to the script)"""
        if not records:
            raise BadParameter("Cannot plot an empty sweep")
        kind = ChannelKind.parse(records[0].channel)
        png_name = f'{Path(csv_name).stem}.png'
        title = f'{kind.value.replace("-", " ").capitalize()} channel with memory'
        template = self.env.get_template('plot_script.py.j2')
        return template.render(
            title=title,
            title_literal=repr(title),
            version=__version__,
            csv_name=csv_name,
            csv_literal=repr(csv_name),
            png_name=png_name,
            png_literal=repr(png_name),
            panels_literal=pprint.pformat(_panels(kind), indent=4, width=96),
        )

    def emit_plot_script(self, records: Sequence[SweepRecord], path: PathLike,
                         csv_path: Optional[PathLike] = None) -> Path:
        """
        Write a standalone plotting script.

        The script reads its CSV (default: same stem, .csv suffix) from its own
        directory, draws lhs solid and rhs dashed with one colour per mu, and
        saves a PNG beside itself.
        """
        path = Path(path)
        csv_name = Path(csv_path).name if csv_path else f'{path.stem}.csv'
        source = self.render_plot_script(records, csv_name)
        target = self.record_repository.write_text(path, source)
        logger.info("Wrote plot script %s", target)
        return target

    def export(self, records: Sequence[SweepRecord], csv_path: PathLike, plot: bool = True) -> List[Path]:
        """CSV plus (optionally) its plot script; returns the written paths"""
        csv_path = Path(csv_path)
        self.write_csv(records, csv_path)
        written = [self.record_repository.resolve(csv_path)]
        if plot and records:
            script = csv_path.with_suffix('.py')
            if script == csv_path:
                script = csv_path.with_name(f'{csv_path.stem}_plot.py')
            written.append(self.emit_plot_script(records, script, csv_path))
        return written
