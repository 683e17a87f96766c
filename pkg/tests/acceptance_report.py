"""Collects the per-criterion lines printed by the acceptance module."""

LINES: list[str] = []


def record(number: int, title: str, ok: bool, detail: str = "") -> str:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}"
    if detail:
        line += f" ({detail})"
    LINES.append(line)
    print(line)
    return line
