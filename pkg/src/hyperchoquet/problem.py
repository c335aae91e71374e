"""Problem documents: the JSON input of the command-line front end.

Subsets are written as arrays of 1-based elements and subfamilies as arrays
of subsets.  A measure given as an array follows the order in which the
family is written; for ``"powerset"`` families and for the inner measures of
integral operators the order is by bitmask (element ``k`` is bit ``k-1``).
The schema ships as ``problem.schema.json`` next to this module.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Any

import jsonschema
import numpy as np

from .aggregation import SUM, SUP, ChoquetOp, FCASpec, ShilkretOp, SugenoOp, TTable, as_vector, build_T
from .aggregation import INF as INF_OP
from .errors import PreconditionError, SchemaError
from .measures import (
    MonotoneMeasure,
    counting_measure,
    maxitive_from_distribution,
    minitive_from_distribution,
    necessity_from,
    possibility_from,
    strongest_capacity,
    validate_monotone,
    weakest_capacity,
)
from .setcore import HyperMask, SetFamily, Universe, make_family, powerset_family

INFINITE = "Infinite"

SCHEMA = json.loads(resources.files(__package__).joinpath("problem.schema.json").read_text())
_VALIDATOR = jsonschema.Draft202012Validator(SCHEMA)

_BUILTIN_OPS = {"sup": SUP, "inf": INF_OP, "sum": SUM}
_INTEGRAL_OPS = {"choquet": ChoquetOp, "sugeno": SugenoOp, "shilkret": ShilkretOp}


@dataclass(frozen=True, eq=False)
class Problem:
    doc: dict
    family: SetFamily
    order: tuple[int, ...]  # family index of each subset in the order written
    mu: MonotoneMeasure
    fca: FCASpec | None
    raw_T: TTable | None
    f: np.ndarray | None
    ybar: float | None
    alphas: tuple[float, ...]
    hypers: tuple[HyperMask, ...]

    @property
    def universe(self) -> Universe:
        return self.family.universe

    def T(self) -> TTable:
        if self.raw_T is not None:
            return self.raw_T
        if self.fca is None or self.f is None:
            raise PreconditionError("the problem needs both 'fca' and 'f', or a raw T table")
        return build_T(self.fca, self.f)

    def written(self, values) -> list:
        """Reorder a per-member array into the order the family was written."""
        return [values[i] for i in self.order]

    def subset(self, mask: int) -> list[int]:
        return [i + 1 for i in self.universe.elements(mask)]

    def subfamily(self, hyper: HyperMask) -> list[list[int]]:
        return [self.subset(self.family.member(i)) for i in self.order if hyper >> i & 1]


def _number(v: Any) -> float:
    return math.inf if v == INFINITE else float(v)


def _mask(universe: Universe, subset: list[int], where: str) -> int:
    bad = [e for e in subset if e > universe.n]
    if bad:
        raise SchemaError(f"{where}: element {bad[0]} is outside 1..{universe.n}")
    return universe.mask(e - 1 for e in subset)


def _measure(spec: Any, family: SetFamily, order: tuple[int, ...], where: str) -> MonotoneMeasure:
    if isinstance(spec, list):
        if len(spec) != family.p:
            raise SchemaError(f"{where}: {len(spec)} values for a family of {family.p} sets")
        values = np.empty(family.p)
        for k, v in enumerate(spec):
            values[order[k]] = _number(v)
        return validate_monotone(family, values)
    kind = spec["kind"]
    if kind in ("counting", "weakest", "strongest"):
        build = {"counting": counting_measure, "weakest": weakest_capacity, "strongest": strongest_capacity}[kind]
        return build(family)
    if "pi" not in spec:
        raise SchemaError(f"{where}: measure kind {kind!r} needs a distribution 'pi'")
    pi = [_number(v) for v in spec["pi"]]
    if len(pi) != family.universe.n:
        raise SchemaError(f"{where}: 'pi' has {len(pi)} entries, the universe has {family.universe.n}")
    if kind == "possibility":
        return possibility_from(pi, family)
    if kind == "necessity":
        return necessity_from(pi, family)
    measure = minitive_from_distribution(pi) if kind == "minitive" else maxitive_from_distribution(pi)
    if measure.family.members != family.members:
        raise SchemaError(f"{where}: measure kind {kind!r} is defined on the powerset family only")
    return measure


def _operator(spec: Any, universe: Universe, where: str):
    if isinstance(spec, str):
        return _BUILTIN_OPS[spec]
    inner_family = powerset_family(universe)
    inner = _measure(spec["inner"], inner_family, tuple(range(inner_family.p)), f"{where}.inner")
    return _INTEGRAL_OPS[spec["kind"]](inner)


def parse_problem(doc: Any) -> Problem:
    """Validate a decoded problem document and build the library objects."""
    errors = sorted(_VALIDATOR.iter_errors(doc), key=lambda e: list(e.absolute_path))
    if errors:
        err = errors[0]
        path = "/".join(str(p) for p in err.absolute_path) or "<root>"
        raise SchemaError(f"{path}: {err.message}")
    universe = Universe(doc["n"])
    if doc["family"] == "powerset":
        family = powerset_family(universe)
        order = tuple(range(family.p))
    else:
        masks = [_mask(universe, s, f"family/{k}") for k, s in enumerate(doc["family"])]
        if len(set(masks)) != len(masks):
            raise SchemaError("family: a subset is listed twice")
        if universe.full not in masks:
            raise SchemaError(
                f"family: must contain X = {universe.label(universe.full)}; the aggregation on the "
                "conditional set X^c = {} anchors T(X) = 0, so every survival value is attained"
            )
        family = make_family(universe, masks)
        order = tuple(family.index_of(m) for m in masks)
    mu = _measure(doc["mu"], family, order, "mu")

    fca = raw_T = None
    if "fca" in doc:
        spec = doc["fca"]
        if isinstance(spec, dict) and spec["kind"] == "raw":
            if len(spec["T"]) != family.p:
                raise SchemaError(f"fca/T: {len(spec['T'])} values for a family of {family.p} sets")
            values = np.empty(family.p)
            for k, v in enumerate(spec["T"]):
                values[order[k]] = v
            raw_T = TTable(family, values)
        elif isinstance(spec, dict) and spec["kind"] == "mixed":
            by_member = {}
            for k, item in enumerate(spec["assign"]):
                mask = _mask(universe, item["set"], f"fca/assign/{k}")
                if mask not in family:
                    raise SchemaError(f"fca/assign/{k}: {universe.label(mask)} is not a family member")
                by_member[mask] = _operator(item["op"], universe, f"fca/assign/{k}/op")
            default = _operator(spec["default"], universe, "fca/default") if "default" in spec else None
            fca = FCASpec.mixed(family, by_member, default)
        else:
            fca = FCASpec.uniform(family, _operator(spec, universe, "fca"))

    f = None
    if "f" in doc:
        if len(doc["f"]) != universe.n:
            raise SchemaError(f"f: {len(doc['f'])} values for a universe of {universe.n} elements")
        f = as_vector(doc["f"], universe.n)

    queries = doc.get("queries", {})
    hypers = []
    for k, sub in enumerate(queries.get("hyper", [])):
        hypers.append(parse_hyper(family, sub, f"queries/hyper/{k}"))
    return Problem(
        doc=doc,
        family=family,
        order=order,
        mu=mu,
        fca=fca,
        raw_T=raw_T,
        f=f,
        ybar=doc.get("ybar"),
        alphas=tuple(float(a) for a in queries.get("alpha", [])),
        hypers=tuple(hypers),
    )


def parse_hyper(family: SetFamily, subsets: Any, where: str = "hyper") -> HyperMask:
    """Hypermask of a subfamily written as an array of 1-based subsets."""
    if not isinstance(subsets, list) or not all(
        isinstance(s, list) and all(isinstance(e, int) and not isinstance(e, bool) and e >= 1 for e in s)
        for s in subsets
    ):
        raise SchemaError(f"{where}: a subfamily is an array of arrays of 1-based elements")
    hyper = 0
    for s in subsets:
        mask = _mask(family.universe, s, where)
        if mask not in family:
            raise SchemaError(f"{where}: {family.universe.label(mask)} is not a family member")
        hyper |= 1 << family.index_of(mask)
    return hyper


def load_problem(path: str | Path) -> Problem:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: not valid JSON ({exc})") from None
    return parse_problem(doc)
