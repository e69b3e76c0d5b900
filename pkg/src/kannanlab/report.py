"""Stable report rendering.

Reports are plain dictionaries rendered as sorted, indented JSON with every
float rounded to 12 significant digits, so identical runs produce
byte-identical documents suitable for golden-file comparison.
"""

from __future__ import annotations

import json

FORMAT_VERSION = "1"


def round_floats(value):
    """Recursively round floats to 12 significant digits."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, float):
        if value != value or value in (float("inf"), float("-inf")):
            return repr(value)
        return float(f"{value:.12g}")
    if isinstance(value, dict):
        return {str(k): round_floats(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [round_floats(v) for v in value]
    return value


def render_json(doc: dict) -> str:
    return json.dumps(round_floats(doc), sort_keys=True, indent=2) + "\n"


def render_text(doc: dict) -> str:
    lines: list[str] = []
    _flatten("", round_floats(doc), lines)
    return "\n".join(lines) + "\n"


def _flatten(prefix: str, value, lines: list[str]) -> None:
    if isinstance(value, dict):
        for key in sorted(value):
            _flatten(f"{prefix}{key}." if prefix else f"{key}.", value[key], lines)
        return
    if isinstance(value, list):
        for i, item in enumerate(value):
            _flatten(f"{prefix}{i}.", item, lines)
        return
    lines.append(f"{prefix.rstrip('.')}: {value}")


def document(command: str, body: dict) -> dict:
    doc = {"format_version": FORMAT_VERSION, "command": command}
    doc.update(body)
    return doc
