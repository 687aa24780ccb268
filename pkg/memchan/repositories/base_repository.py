"""
Base repository pattern implementation
Shared path handling for file-backed inputs and outputs
"""

from pathlib import Path
from typing import Union

from memchan.exceptions import OutputError

PathLike = Union[str, Path]


class FileRepository:
    """Base class for repositories that read or write a single file"""

    def __init__(self, base_dir: PathLike = '.'):
        self.base_dir = Path(base_dir)

    def resolve(self, path: PathLike) -> Path:
        """Resolve a path relative to the repository base directory"""
        path = Path(path)
        return path if path.is_absolute() else self.base_dir / path

    def prepare_output(self, path: PathLike) -> Path:
        """Resolve an output path and create its parent directory"""
        target = self.resolve(path)
        try:
            target.parent.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            raise OutputError(f"Cannot create output directory {target.parent}: {e}") from e
        return target

    def write_text(self, path: PathLike, content: str) -> Path:
        target = self.prepare_output(path)
        try:
            target.write_text(content, encoding='utf-8', newline='\n')
        except OSError as e:
            raise OutputError(f"Failed to write {target}: {e}") from e
        return target
