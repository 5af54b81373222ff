"""Parameter sweeps behind the verify command, with an optional worker pool.

Tasks are (verifier name, parameter dict) pairs built in a fixed canonical
order; results land in the report file in that order whatever the worker
count, so files are reproducible.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from . import families, k0, oracle
from .oracle import PRIME, RATIONAL, FieldConfig
from .reports import Report, ReportFile

SUITES = ("cooperad", "anticyclic", "oracle", "all")

Task = tuple[str, dict]


@dataclass(frozen=True)
class SweepConfig:
    """What to run: suites, parameter bounds, oracle settings, workers."""

    suite: str = "all"
    max_m: int = 4
    max_n: int = 0  # 0 means: same as max_m
    max_p: int = 0
    oracle_max: int = 0  # 0 means: min(3, bounds)
    field_kind: str = PRIME
    prime: int = 32003
    workers: int = 1
    out_dir: str = "."

    def __post_init__(self) -> None:
        if self.suite not in SUITES:
            raise ValueError(f"suite must be one of {', '.join(SUITES)}, got {self.suite!r}")
        if self.max_m < 1:
            raise ValueError(f"max m must be positive, got {self.max_m}")
        for name, v in (("max n", self.max_n), ("max p", self.max_p), ("oracle max", self.oracle_max)):
            if v < 0:
                raise ValueError(f"{name} must be positive, got {v}")
        if self.workers < 1:
            raise ValueError(f"workers must be positive, got {self.workers}")
        if self.field_kind not in (PRIME, RATIONAL):
            raise ValueError(f"field must be {PRIME!r} or {RATIONAL!r}, got {self.field_kind!r}")
        if self.field_kind == PRIME and not oracle.is_prime(self.prime):
            raise ValueError(f"modulus {self.prime} is not prime")
        if self.effective_oracle_max > min(self.bounds):
            raise ValueError(
                f"oracle max {self.effective_oracle_max} exceeds sweep bounds {self.bounds}"
            )

    @property
    def bounds(self) -> tuple[int, int, int]:
        return (self.max_m, self.max_n or self.max_m, self.max_p or self.max_m)

    @property
    def effective_oracle_max(self) -> int:
        return self.oracle_max or min(3, *self.bounds)

    def field_config(self) -> FieldConfig:
        return FieldConfig(self.field_kind, self.prime)

    def echo(self) -> dict:
        # worker count and output location are execution details: the file
        # content must not depend on them
        d = asdict(self)
        del d["workers"]
        del d["out_dir"]
        d["effective_bounds"] = list(self.bounds)
        d["effective_oracle_max"] = self.effective_oracle_max
        return d


_VERIFIERS = {
    "commutativity": families.verify_commutativity,
    "associativity": families.verify_associativity,
    "border": families.verify_border,
    "inner": families.verify_inner,
    "duality": k0.duality_check,
    "dias_axioms": k0.dias_operad_axiom_check,
    "border_k0": k0.verify_border_k0,
    "inner_k0": k0.verify_inner_k0,
    "tau_order": k0.tau_order_check,
}

_ORACLE_VERIFIERS = {
    "oracle_commutativity": oracle.oracle_commutativity_check,
    "oracle_associativity": oracle.oracle_associativity_check,
    "oracle_nakayama_gamma": oracle.oracle_nakayama_gamma_check,
    "oracle_nakayama_mu": oracle.oracle_nakayama_mu_check,
    "oracle_unit": oracle.oracle_unit_check,
}


def run_task(task: Task) -> Report:
    name, params = task
    if name in _VERIFIERS:
        return _VERIFIERS[name](**params)
    if name in _ORACLE_VERIFIERS:
        kw = dict(params)
        config = FieldConfig(kw.pop("field"), kw.pop("q"))
        return _ORACLE_VERIFIERS[name](**kw, config=config)
    raise ValueError(f"unknown verifier {name!r}")


def _cooperad_tasks(mm: int, mn: int, mp: int) -> list[Task]:
    tasks: list[Task] = []
    for m in range(2, mm + 1):
        for n in range(1, mn + 1):
            for p in range(1, mp + 1):
                for i in range(1, m):
                    for j in range(i + 1, m + 1):
                        tasks.append(("commutativity", {"m": m, "n": n, "p": p, "i": i, "j": j}))
    for m in range(1, mm + 1):
        for n in range(1, mn + 1):
            for p in range(1, mp + 1):
                for i in range(1, m + 1):
                    for j in range(1, n + 1):
                        tasks.append(("associativity", {"m": m, "n": n, "p": p, "i": i, "j": j}))
    for m in range(1, mm + 1):
        for n in range(1, mn + 1):
            for i in range(1, m + 1):
                tasks.append(("duality", {"m": m, "i": i, "n": n}))
    for m in range(1, mm + 1):
        for n in range(1, mn + 1):
            for p in range(1, mp + 1):
                for i in range(1, m + 1):
                    for j in range(1, max(m, n) + 1):
                        if i < j <= m or j <= n:
                            tasks.append(("dias_axioms", {"m": m, "n": n, "p": p, "i": i, "j": j}))
    return tasks


def _anticyclic_tasks(mm: int, mn: int) -> list[Task]:
    tasks: list[Task] = []
    for m in range(1, mm + 1):
        for n in range(1, mn + 1):
            tasks.append(("border", {"m": m, "n": n}))
    for m in range(2, mm + 1):
        for n in range(1, mn + 1):
            for i in range(2, m + 1):
                tasks.append(("inner", {"m": m, "n": n, "i": i}))
    for m in range(1, mm + 1):
        for n in range(1, mn + 1):
            tasks.append(("border_k0", {"m": m, "n": n}))
    for m in range(2, mm + 1):
        for n in range(1, mn + 1):
            for i in range(2, m + 1):
                tasks.append(("inner_k0", {"m": m, "n": n, "i": i}))
    for n in range(1, mm + mn):
        tasks.append(("tau_order", {"n": n}))
    return tasks


def _oracle_tasks(k: int, config: FieldConfig) -> list[Task]:
    tasks: list[Task] = []
    # every instance runs over the configured field and over the rationals
    configs = [config]
    if config.kind != RATIONAL:
        configs.append(FieldConfig(RATIONAL))
    for cfg in configs:
        fc = {"field": cfg.kind, "q": cfg.q}
        for m in range(2, k + 1):
            for n in range(1, k + 1):
                for p in range(1, k + 1):
                    for i in range(1, m):
                        for j in range(i + 1, m + 1):
                            tasks.append(
                                ("oracle_commutativity", {"m": m, "n": n, "p": p, "i": i, "j": j, **fc})
                            )
        for m in range(1, k + 1):
            for n in range(1, k + 1):
                for p in range(1, k + 1):
                    for i in range(1, m + 1):
                        for j in range(1, n + 1):
                            tasks.append(
                                ("oracle_associativity", {"m": m, "n": n, "p": p, "i": i, "j": j, **fc})
                            )
        for m in range(1, k + 1):
            for n in range(1, k + 1):
                for i in range(1, m + 1):
                    tasks.append(("oracle_nakayama_gamma", {"m": m, "n": n, "i": i, **fc}))
                    tasks.append(("oracle_unit", {"m": m, "n": n, "i": i, **fc}))
                    if i >= 2:
                        tasks.append(("oracle_nakayama_mu", {"m": m, "n": n, "i": i, **fc}))
    return tasks


def build_tasks(config: SweepConfig) -> list[Task]:
    mm, mn, mp = config.bounds
    tasks: list[Task] = []
    if config.suite in ("cooperad", "all"):
        tasks += _cooperad_tasks(mm, mn, mp)
    if config.suite in ("anticyclic", "all"):
        tasks += _anticyclic_tasks(mm, mn)
    if config.suite in ("oracle", "all"):
        tasks += _oracle_tasks(config.effective_oracle_max, config.field_config())
    return tasks


def run_sweep(config: SweepConfig) -> ReportFile:
    start = time.perf_counter()
    tasks = build_tasks(config)
    if config.workers > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            reports = list(pool.map(run_task, tasks, chunksize=8))
    else:
        reports = [run_task(t) for t in tasks]
    return ReportFile.from_reports(config.echo(), reports, time.perf_counter() - start)
