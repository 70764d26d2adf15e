from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Optional

from django.conf import settings

from .output import plain, write_json


def manifest_path(output):
    """``dos.csv`` -> ``dos.manifest.json`` next to it."""
    output = Path(output)
    return output.with_name(f'{output.stem}.manifest.json')


def seed_digits(seed):
    """Seeds are stored as digit strings; 2**64 - 1 overflows SQLite."""
    return '' if seed is None else str(int(seed))


@dataclass
class RunManifest:
    """Parameters, seed and provenance of one run."""

    subcommand: str
    parameters: dict
    master_seed: Optional[int] = None
    wall_time: float = 0.0
    outputs: list = field(default_factory=list)
    meta: dict = field(default_factory=dict)
    version: str = field(default_factory=lambda: settings.LLOYD_VERSION)

    def as_dict(self):
        return plain(asdict(self))

    def write(self, output):
        path = manifest_path(output)
        write_json(path, self.as_dict())
        return path

    def save_record(self):
        from .models import Run

        data = self.as_dict()
        return Run.objects.create(
            subcommand=data['subcommand'],
            parameters=data['parameters'],
            master_seed=seed_digits(data['master_seed']),
            version=data['version'],
            wall_time=data['wall_time'],
            outputs=data['outputs'],
            meta=data['meta'],
        )
