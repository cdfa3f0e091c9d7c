"""Allow `python -m meshcompiler`."""

from .cli import run

run()
