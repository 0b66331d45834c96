"""Hyperelliptic Lefschetz fibrations as double branched covers."""

__version__ = "1.0.0"
