"""Plain-text group files: a degree header plus one generator per line.

Format: the first meaningful line is "degree: n"; every following nonempty
line holds one generator in cycle notation ("(1 2 3)(4 5)" or "id").
"#" starts a comment anywhere on a line.  UTF-8, LF or CRLF.
"""

from __future__ import annotations

from .perm import Permutation, PermGroup


class GroupFileError(ValueError):
    """Malformed group file, with a 1-based line number in the message."""


def parse_group_file(text: str) -> PermGroup:
    degree: int | None = None
    gens: list[Permutation] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if degree is None:
            if not line.startswith("degree:"):
                raise GroupFileError(f"line {lineno}: expected 'degree: n' header")
            value = line[len("degree:"):].strip()
            try:
                degree = int(value)
            except ValueError:
                raise GroupFileError(f"line {lineno}: bad degree {value!r}") from None
            if degree < 1:
                raise GroupFileError(f"line {lineno}: degree must be >= 1")
            continue
        try:
            gens.append(Permutation.parse(line, degree))
        except ValueError as exc:
            raise GroupFileError(f"line {lineno}: {exc}") from None
    if degree is None:
        raise GroupFileError("missing 'degree: n' header")
    return PermGroup(degree, gens)


def load_group_file(path: str) -> PermGroup:
    with open(path, encoding="utf-8") as fh:
        return parse_group_file(fh.read())
