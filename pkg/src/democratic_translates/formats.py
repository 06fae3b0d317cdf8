"""Text formats: group specs, rationals, periodization specs, caches and reports.

Group spec grammar::

    spec   := "prufer:" P "@" N | items | "1"
    items  := item ("," item)*
    item   := ORDER | ORDER "^" COUNT

``2^4`` is ``2,2,2,2``; ``2^0`` and ``1`` are the trivial group. Rationals are
always written reduced as ``"p/q"`` (``"1/1"`` for one).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Optional, Sequence

from .autocorr import ClassEnumeration, SubsetGamma, autocorr_vector
from .groups import FiniteAbelianGroup, Subgroup, exhausting_chain, make_group, prufer_truncation
from .hull import HullReport

CACHE_FORMAT_VERSION = 1


class SpecError(ValueError):
    """Malformed group, rational or periodization spec."""


# -- rationals ----------------------------------------------------------------


def format_rational(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not re.fullmatch(r"-?\d+(/\d+)?", text):
        raise SpecError(f"not a rational: {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise SpecError(f"zero denominator in {text!r}") from None


# -- groups ---------------------------------------------------------------------


@dataclass(frozen=True)
class GroupSpec:
    """A parsed group spec: the group plus the subgroup chain it comes with."""

    group: FiniteAbelianGroup
    prufer: Optional[tuple[int, int]] = None

    @property
    def chain(self) -> list[Subgroup]:
        if self.prufer is not None:
            return prufer_truncation(*self.prufer)[1]
        return exhausting_chain(self.group)

    def canonical(self) -> str:
        if self.prufer is not None:
            p, n = self.prufer
            return f"prufer:{p}@{n}"
        orders = self.group.orders
        if not orders:
            return "1"
        items, i = [], 0
        while i < len(orders):
            j = i
            while j < len(orders) and orders[j] == orders[i]:
                j += 1
            items.append(str(orders[i]) if j - i == 1 else f"{orders[i]}^{j - i}")
            i = j
        return ",".join(items)

    def __str__(self) -> str:
        return self.canonical()


def parse_group_spec(text: str) -> GroupSpec:
    text = text.strip()
    m = re.fullmatch(r"prufer:(\d+)@(\d+)", text)
    if m:
        p, n = int(m.group(1)), int(m.group(2))
        try:
            group, _ = prufer_truncation(p, n)
        except ValueError as exc:
            raise SpecError(str(exc)) from None
        return GroupSpec(group, (p, n))
    if text == "1":
        return GroupSpec(make_group([]))
    orders = []
    for item in text.split(","):
        m = re.fullmatch(r"(\d+)(?:\^(\d+))?", item.strip())
        if not m:
            raise SpecError(f"malformed group spec {text!r}")
        order, count = int(m.group(1)), int(m.group(2) or 1)
        if order < 2:
            raise SpecError(f"cyclic orders must be >= 2 in {text!r}")
        orders += [order] * count
    return GroupSpec(make_group(orders))


# -- periodization specs ----------------------------------------------------------


def parse_periodization(text: str):
    """``chain:<group>;w=<p/q,...>;tail=<p/q>`` or ``table:<group>;v=<p/q,...>``."""
    from .democracy import ChainAnnuli, DualTable

    kind, _, rest = text.partition(":")
    parts = rest.split(";")
    if kind not in ("chain", "table") or len(parts) < 2:
        raise SpecError(f"malformed periodization spec {text!r}")
    gspec = parse_group_spec(parts[0])
    fields = {}
    for part in parts[1:]:
        key, eq, value = part.partition("=")
        if not eq:
            raise SpecError(f"malformed field {part!r}")
        fields[key.strip()] = value
    try:
        if kind == "table":
            values = [parse_rational(v) for v in fields["v"].split(",")]
            return gspec, DualTable(gspec.group, tuple(values))
        weights_text = fields.get("w", "")
        weights = [parse_rational(v) for v in weights_text.split(",")] if weights_text else []
        tail = parse_rational(fields.get("tail", "0"))
        return gspec, ChainAnnuli(gspec.group, tuple(gspec.chain), tuple(weights), tail)
    except KeyError as exc:
        raise SpecError(f"missing field {exc} in {text!r}") from None
    except ValueError as exc:
        if isinstance(exc, SpecError):
            raise
        raise SpecError(str(exc)) from None


def format_periodization(gspec: GroupSpec, p) -> str:
    from .democracy import ChainAnnuli

    if isinstance(p, ChainAnnuli):
        w = ",".join(format_rational(x) for x in p.weights)
        return f"chain:{gspec.canonical()};w={w};tail={format_rational(p.tail)}"
    return f"table:{gspec.canonical()};v=" + ",".join(format_rational(x) for x in p.values)


# -- enumeration cache --------------------------------------------------------------


def class_cache_text(gspec: GroupSpec, classes: ClassEnumeration) -> str:
    name = gspec.canonical()
    lines = [json.dumps({"format": CACHE_FORMAT_VERSION, "group": name,
                         "total": classes.total, "distinct": classes.distinct})]
    for gamma, v in classes:
        lines.append(json.dumps({"group": name, "gamma": list(gamma.elements),
                                 "v": [format_rational(x) for x in v.entries]}))
    return "\n".join(lines) + "\n"


def write_class_cache(path: Path, gspec: GroupSpec, classes: ClassEnumeration) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(class_cache_text(gspec, classes))


def read_class_cache(path: Path, gspec: GroupSpec) -> Optional[ClassEnumeration]:
    """Load a cache, or None when it is missing, stale or for another group."""
    path = Path(path)
    if not path.exists():
        return None
    with path.open() as fh:
        header = json.loads(fh.readline() or "{}")
        if header.get("format") != CACHE_FORMAT_VERSION or header.get("group") != gspec.canonical():
            return None
        g = gspec.group
        classes = []
        for line in fh:
            rec = json.loads(line)
            gamma = SubsetGamma(g, tuple(rec["gamma"]))
            v = autocorr_vector(gamma)
            if list(v.entries) != [parse_rational(x) for x in rec["v"]]:
                return None
            classes.append((gamma, v))
    if len(classes) != header.get("distinct"):
        return None
    return ClassEnumeration(g, classes, header["total"])


# -- reports ----------------------------------------------------------------------------


def hull_report_json(report: HullReport) -> dict:
    certs = {}
    for i, c in sorted(report.certificates.items()):
        if not c.extreme:
            certs[str(i)] = {"kind": "convex",
                             "weights": {str(j): format_rational(w) for j, w in sorted(c.weights.items())}}
        else:
            certs[str(i)] = {"kind": "separating",
                             "functional": [format_rational(a) for a in c.functional],
                             "offset": format_rational(c.offset)}
    return {"points": report.n_points, "extreme": report.extreme_indices, "certificates": certs}


def table3_csv(rows: Iterable) -> str:
    return "\n".join(["n,total,distinct,extreme"] + [r.csv() for r in rows]) + "\n"


def democracy_report_json(report, gspec: GroupSpec) -> dict:
    def fmt(x):
        return format_rational(x) if isinstance(x, Fraction) else float(x)

    return {
        "group": gspec.canonical(),
        "family": report.family,
        "exact": report.exact,
        "infimum": fmt(report.infimum),
        "witness": list(report.witness.elements),
        "ess_sup": format_rational(report.ess_sup),
        "values": [{"gamma": list(g.elements), "value": fmt(v)} for g, v in report.values],
    }


def counterexample_json(report) -> dict:
    return {
        "n": report.n,
        "level": report.level,
        "group": f"prufer:2@{report.level}",
        "gamma": list(report.gamma.elements),
        "card_gamma": report.gamma.cardinality,
        "periodization": format_periodization(GroupSpec(report.group, (2, report.level)), report.p),
        "perp_integrals": [format_rational(x) for x in report.perp_integrals],
        "annulus_integrals": {str(i): format_rational(x) for i, x in report.annulus_integrals.items()},
        "gamma_value": format_rational(report.gamma_value),
        "subgroup_values": [format_rational(x) for x in report.subgroup_values],
        "subgroup_infimum": format_rational(report.subgroup_infimum),
        "bound": format_rational(report.bound),
        "within_bound": report.within_bound,
    }


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def parse_dual_values(values: Sequence[str]) -> list[Fraction]:
    return [parse_rational(v) for v in values]
