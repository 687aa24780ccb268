"""
Record repository
Writes sweep records as CSV through pandas
"""

import logging
from typing import List, Sequence

import pandas as pd

from memchan.constants import CSV_COLUMNS, CSV_FLOAT_FORMAT
from memchan.exceptions import OutputError
from memchan.models.record import SweepRecord
from memchan.repositories.base_repository import FileRepository, PathLike

logger = logging.getLogger(__name__)


class RecordRepository(FileRepository):
    """Repository for sweep result tables"""

    @staticmethod
    def to_frame(records: Sequence[SweepRecord]) -> pd.DataFrame:
        """Records as a DataFrame in the fixed CSV column order"""
        rows = [record.to_dict() for record in records]
        return pd.DataFrame(rows, columns=CSV_COLUMNS)

    def write_csv(self, records: Sequence[SweepRecord], path: PathLike) -> None:
        """Write records in order; an empty list yields a header-only file"""
        target = self.prepare_output(path)
        frame = self.to_frame(records)
        try:
            frame.to_csv(target, index=False, float_format=CSV_FLOAT_FORMAT,
                         lineterminator='\n', encoding='utf-8')
        except OSError as e:
            raise OutputError(f"Failed to write {target}: {e}") from e
        logger.info("Wrote %d records to %s", len(frame), target)

    def read_csv(self, path: PathLike) -> pd.DataFrame:
        """Load a sweep CSV written by write_csv"""
        source = self.resolve(path)
        try:
            return pd.read_csv(source)
        except OSError as e:
            raise OutputError(f"Failed to read {source}: {e}") from e

    def read_records(self, path: PathLike) -> List[SweepRecord]:
        frame = self.read_csv(path)
        frame['channel'] = frame['channel'].astype(str)
        return [SweepRecord(**row) for row in frame[CSV_COLUMNS].to_dict(orient='records')]
