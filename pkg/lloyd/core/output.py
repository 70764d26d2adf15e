import csv
import json
from contextlib import contextmanager
from pathlib import Path

import numpy as np

FLOAT_FORMAT = '%.12g'


def format_number(value, float_format=FLOAT_FORMAT):
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return float_format % float(value)


@contextmanager
def open_target(target):
    if hasattr(target, 'write'):
        yield target
        return
    with open(Path(target), 'w', encoding='utf-8', newline='') as stream:
        yield stream


def write_csv(target, header, columns, float_format=FLOAT_FORMAT):
    """Write equally long numeric columns under ``header``."""
    columns = [np.asarray(column) for column in columns]
    lengths = {len(column) for column in columns}
    if len(lengths) > 1:
        raise ValueError(f'columns have different lengths: {sorted(lengths)}')
    with open_target(target) as stream:
        writer = csv.writer(stream, lineterminator='\n')
        writer.writerow(header)
        for row in zip(*columns):
            writer.writerow(
                [format_number(value, float_format) for value in row]
            )


def write_json(target, payload):
    with open_target(target) as stream:
        json.dump(payload, stream, indent=2, sort_keys=True,
                  ensure_ascii=False, default=_jsonable)
        stream.write('\n')


def _jsonable(value):
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, Path):
        return str(value)
    raise TypeError(f'{type(value).__name__} is not JSON serializable')


def plain(payload):
    """``payload`` with numpy scalars and arrays turned into builtins."""
    return json.loads(json.dumps(payload, default=_jsonable))
