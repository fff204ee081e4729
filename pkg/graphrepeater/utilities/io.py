from typing import Any, Iterable, Iterator, Mapping, Sequence, TextIO
from contextlib import contextmanager
import csv
import os
import sys
import tempfile


def format_value(value:Any) -> str:
    """Render one CSV cell; floats keep full precision, None becomes an empty cell"""
    if value is None:
        return ''
    elif isinstance(value, bool):
        return 'true' if value else 'false'
    elif isinstance(value, float):
        return repr(value)
    return str(value)

@contextmanager
def atomic_writer(path:str, suffix:str = '.tmp') -> Iterator[TextIO]:
    """Open `path` for writing through a temporary sibling that replaces it on success.

    A failed run leaves no partial output. A path of `-` yields standard output.
    """
    if path == '-':
        yield sys.stdout
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp_path = tempfile.mkstemp(prefix='.graphrepeater-', suffix=suffix, dir=directory)
    try:
        with os.fdopen(fd, 'w', newline='') as f:
            yield f
        os.replace(tmp_path, path)
    except BaseException:
        if os.path.exists(tmp_path):
            os.remove(tmp_path)
        raise

def _write_rows(f:TextIO, fields:Sequence[str], rows:Iterable[Sequence[Any]], metadata:Mapping[str, Any]) -> None:
    for key, value in metadata.items():
        f.write(f'# {key}={format_value(value)}\n')
    w = csv.writer(f, lineterminator='\n')
    w.writerow(fields)
    for row in rows:
        w.writerow([format_value(v) for v in row])

def write_csv(path:str,
              fields:Sequence[str],
              rows:Iterable[Sequence[Any]],
              metadata:Mapping[str, Any]) -> None:
    """Write a CSV file preceded by `# key=value` metadata lines, atomically; `-` writes to standard output"""
    with atomic_writer(path, '.csv') as f:
        _write_rows(f, fields, rows, metadata)

def write_text(path:str, text:str) -> None:
    with atomic_writer(path) as f:
        f.write(text)

def read_csv(path:str):
    """Read a file written by write_csv; returns (metadata, fields, rows of strings)"""
    metadata = {}
    with open(path, newline='') as f:
        lines = f.read().splitlines()
    body = []
    for line in lines:
        if line.startswith('# '):
            key, _, value = line[2:].partition('=')
            metadata[key] = value
        else:
            body.append(line)
    reader = csv.reader(body)
    fields = next(reader, [])
    return metadata, fields, [row for row in reader]
