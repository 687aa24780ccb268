"""
Result records
One row per evaluated (mu, D) point, plus oracle comparison entries
"""

from dataclasses import asdict, dataclass
from typing import Any, Dict

from memchan.constants import INEQUALITY_SLACK


@dataclass(frozen=True)
class UncertaintyRecord:
    """
    Both sides of the memory-assisted relation at one point, in bits.

    s_xB and s_zB hold S(R|B) and S(Q|B) for the configured observable pair; the
    column names follow the default sigma_x / sigma_z pair, so with observables
    "xy" the s_zB column is S(sigma_y|B).
    """
    D: float
    mu: float
    lhs: float
    rhs: float
    s_xB: float
    s_zB: float
    purity: float
    mu_lhs: float
    mu_rhs: float

    @property
    def gap(self) -> float:
        return self.lhs - self.rhs

    def satisfies_bound(self, slack: float = INEQUALITY_SLACK) -> bool:
        return self.lhs >= self.rhs - slack

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class SweepRecord(UncertaintyRecord):
    """UncertaintyRecord tagged with its channel and closed-form deviation"""
    channel: str = ''
    table2_maxdev: float = float('nan')

    @classmethod
    def from_uncertainty(cls, record: UncertaintyRecord, channel: str,
                         table2_maxdev: float) -> 'SweepRecord':
        return cls(**record.to_dict(), channel=channel, table2_maxdev=table2_maxdev)


@dataclass(frozen=True)
class EntryDeviation:
    """Printed analytic value vs Kraus-evolved value for one Bloch/correlation entry"""
    entry: str
    printed: float
    kraus: float

    @property
    def deviation(self) -> float:
        return abs(self.printed - self.kraus)
