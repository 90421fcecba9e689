"""Rendering of command results and the run manifest."""
# License: GNU AGPLv3

import csv
import hashlib
import io
import json
from dataclasses import dataclass, asdict
from fractions import Fraction

FORMATS = ('text', 'kv', 'csv')


def _text(rows):
    columns = list(rows[0])
    table = [columns] + [[str(row[c]) for c in columns] for row in rows]
    widths = [max(len(line[i]) for line in table)
              for i in range(len(columns))]
    return "".join("  ".join(cell.ljust(width)
                             for cell, width in zip(line, widths)).rstrip()
                   + "\n" for line in table)


def _kv(rows):
    if len(rows) == 1:
        return "".join(f"{key} = {value}\n" for key, value in rows[0].items())
    return "".join(f"[{i}].{key} = {value}\n"
                   for i, row in enumerate(rows) for key, value in row.items())


def _csv(rows):
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(rows[0]),
                            lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buffer.getvalue()


def render(rows, fmt='text'):
    """Render a list of dictionaries with identical keys.

    Parameters
    ----------
    rows : list of dict, required
        Values are rendered with :func:`str`, so numbers must already be
        formatted at their final precision.

    fmt : ``'text'`` | ``'kv'`` | ``'csv'``, optional, default: ``'text'``
        Aligned columns, one ``key = value`` line per entry (prefixed by
        the row index when there are several rows), or a CSV table with a
        header.

    Returns
    -------
    output : str

    """
    if fmt not in FORMATS:
        raise ValueError(f"Parameter `fmt` is {fmt!r}, which is not in "
                         f"{FORMATS}.")
    if not rows:
        return ""
    return {'text': _text, 'kv': _kv, 'csv': _csv}[fmt](rows)


def digest(output):
    """SHA-256 hex digest of the UTF-8 encoding of `output`."""
    return hashlib.sha256(output.encode("utf-8")).hexdigest()


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    return value


@dataclass(frozen=True)
class RunManifest:
    """Record of one command-line run.

    Two runs whose manifests agree in everything but `wall_time` produced
    byte-identical primary outputs.

    Parameters
    ----------
    command : str
    config : dict
        Every option that can influence the primary output.
    version : str
    wall_time : float
        Seconds.
    output_sha256 : str
        Digest of the primary output.

    """
    command: str
    config: dict
    version: str
    wall_time: float
    output_sha256: str

    def to_json(self):
        record = asdict(self)
        record['config'] = {key: _jsonable(value)
                            for key, value in self.config.items()}
        record['wall_time'] = round(self.wall_time, 3)
        return json.dumps(record, sort_keys=True)
