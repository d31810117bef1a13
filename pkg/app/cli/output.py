import sys
from pathlib import Path
from typing import Optional


def write_output(text: str, path: Optional[str] = None) -> None:
    """Data payloads go to --output or stdout; never to the log stream"""
    if path:
        Path(path).write_text(text, encoding="utf-8", newline="")
    else:
        sys.stdout.write(text)
