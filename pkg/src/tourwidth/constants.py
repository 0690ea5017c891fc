"""Tunable constants of the extraction procedures.

The defaults are the values for which the extraction procedures are proven
to succeed.  Smaller values make obstacle-side code reachable on small
instances; extraction may then fail, which is reported as
``CertificateUnavailable`` instead of ``InternalContradiction``.

Profile files are plain ``key = value`` lines; ``#`` starts a comment.
"""

from __future__ import annotations

from dataclasses import dataclass, fields, replace
from pathlib import Path

from .errors import BadParameter


@dataclass(frozen=True)
class Constants:
    # (26k, k)-degree tangle -> (k, 3)-short jungle
    degree_jungle_size: int = 26
    # (5k, 3k)-matching tangle -> (k, 4)-short jungle
    matching_jungle_size: int = 5
    matching_jungle_gap: int = 3
    # backward tangle with >= backward_jungle_arcs * k arcs -> (k, 4)-short immersion jungle
    backward_jungle_arcs: int = 109 ** 2
    backward_jungle_heads: int = 109
    backward_degree_tangle_size: int = 104
    backward_degree_tangle_spread: int = 4
    # containment test runs approx pathwidth with (containment_k * |H|, containment_ell * |H|)
    containment_k: int = 20
    containment_ell: int = 520

    @property
    def is_default(self) -> bool:
        return self == Constants()

    def with_overrides(self, **kwargs) -> "Constants":
        names = {f.name for f in fields(self)}
        bad = set(kwargs) - names
        if bad:
            raise BadParameter(f"unknown constants: {', '.join(sorted(bad))}")
        return replace(self, **{k: int(v) for k, v in kwargs.items()})


PROVEN = Constants()

# Small enough that every extraction branch is reachable on instances with a
# few dozen vertices.
DESK = Constants(
    degree_jungle_size=3,
    matching_jungle_size=3,
    matching_jungle_gap=1,
    backward_jungle_arcs=8,
    backward_jungle_heads=8,
    backward_degree_tangle_size=3,
    backward_degree_tangle_spread=1,
    containment_k=4,
    containment_ell=20,
)


def parse_profile(text: str, base: Constants = PROVEN) -> Constants:
    values: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise BadParameter(f"line {lineno}: expected key = value, got {raw!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        if key == "profile":
            base = {"proven": PROVEN, "desk": DESK}.get(value.lower(), None) or _bad_profile(value)
            continue
        values[key] = value
    try:
        return base.with_overrides(**values)
    except ValueError as exc:
        raise BadParameter(str(exc)) from exc


def _bad_profile(name: str) -> Constants:
    raise BadParameter(f"unknown base profile {name!r}; expected proven or desk")


def load_profile(path: str | Path) -> Constants:
    return parse_profile(Path(path).read_text())
