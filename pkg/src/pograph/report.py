"""Classify the prime-order element graph of a group across all studied classes."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import classes
from .classes import DEFAULT_BUDGET, CheckOutcome, Verdict
from .graph import build_gamma
from .groups import MAX_GROUP_ORDER, build, exponent, is_eppo

__all__ = ["CHECKS", "ClassificationReport", "classify", "IMPLICATIONS"]

CHECKS = {
    "perfect": classes.is_perfect,
    "cograph": classes.is_cograph,
    "chordal": classes.is_chordal,
    "interval": classes.is_interval,
    "split": classes.is_split,
    "threshold": classes.is_threshold,
    "clawfree": classes.is_clawfree,
}

# (premise, consequence); perfect-side implications only bind when perfect is decided
IMPLICATIONS = [
    ("threshold", "split"),
    ("threshold", "cograph"),
    ("interval", "chordal"),
    ("chordal", "perfect"),
    ("cograph", "perfect"),
    ("split", "chordal"),
]


@dataclass
class ClassificationReport:
    spec: str
    order: int
    prime_order_count: int
    exponent: int
    eppo: bool
    checks: dict[str, dict] = field(default_factory=dict)
    timings: dict[str, float] = field(default_factory=dict)

    def verdict(self, name: str) -> str:
        return self.checks[name]["verdict"]

    def flag(self, name: str) -> bool | None:
        v = self.verdict(name)
        return None if v == Verdict.UNKNOWN.value else v == Verdict.IN_CLASS.value

    @property
    def has_unknown(self) -> bool:
        return any(c["verdict"] == Verdict.UNKNOWN.value for c in self.checks.values())

    def implication_violations(self) -> list[tuple[str, str]]:
        out = []
        for a, b in IMPLICATIONS:
            if a in self.checks and b in self.checks:
                if self.flag(a) is True and self.flag(b) is False:
                    out.append((a, b))
        return out

    def to_dict(self) -> dict:
        return {
            "checks": {k: dict(v) for k, v in sorted(self.checks.items())},
            "eppo": self.eppo,
            "exponent": self.exponent,
            "order": self.order,
            "prime_order_count": self.prime_order_count,
            "spec": self.spec,
            "timings": {k: f"PT{v:.6f}S" for k, v in sorted(self.timings.items())},
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ClassificationReport":
        timings = {k: float(v[2:-1]) for k, v in d.get("timings", {}).items()}
        return cls(
            spec=d["spec"],
            order=d["order"],
            prime_order_count=d["prime_order_count"],
            exponent=d["exponent"],
            eppo=d["eppo"],
            checks={k: dict(v) for k, v in d["checks"].items()},
            timings=timings,
        )

    def to_table(self) -> str:
        lines = [
            f"group      {self.spec}",
            f"order      {self.order}",
            f"|S|        {self.prime_order_count}",
            f"exponent   {self.exponent}",
            f"EPPO       {self.eppo}",
            "",
            f"{'class':<10} {'verdict':<11} {'cert':<5} witness",
        ]
        for name, c in self.checks.items():
            w = c["witness"]
            wtxt = "" if w["kind"] == "None" else f"{w['kind']}: " + " ~ ".join(w["vertices"])
            cert = "yes" if c["certified"] else "no"
            lines.append(f"{name:<10} {c['verdict']:<11} {cert:<5} {wtxt}".rstrip())
        return "\n".join(lines) + "\n"


def classify(spec: str, checks=None, budget: float = DEFAULT_BUDGET, max_order: int = MAX_GROUP_ORDER):
    """Build ``spec``, construct its prime-order element graph and run ``checks``."""
    t0 = time.perf_counter()
    G = build(spec, max_order=max_order)
    t1 = time.perf_counter()
    g = build_gamma(G)
    t2 = time.perf_counter()
    names = list(CHECKS) if checks is None else list(checks)
    results: dict[str, CheckOutcome] = {}
    for name in names:
        if name not in CHECKS:
            raise KeyError(f"unknown check {name!r}; choose from {', '.join(CHECKS)}")
        fn = CHECKS[name]
        results[name] = fn(g, budget) if name == "perfect" else fn(g)
    t3 = time.perf_counter()
    report = ClassificationReport(
        spec=spec,
        order=G.n,
        prime_order_count=len(G.element_table.S),
        exponent=exponent(G),
        eppo=is_eppo(G),
        checks={name: out.to_dict(g) for name, out in results.items()},
        timings={"build": t1 - t0, "gamma": t2 - t1, "checks": t3 - t2, "total": t3 - t0},
    )
    return report
