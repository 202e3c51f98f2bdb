"""Pipeline runner and machine-readable reports.

Report schema ``torusk/report@1`` (JSON object, keys in this order, absent
sections omitted):

``command``, ``input`` (the normalized input document), ``validation``
(``complex``: violation strings, ``nonsingular``: failing faces),
``shelling`` (``order``, ``restrictions``), ``h_vector``,
``cell_dimensions``, ``betti``, ``k_theory``, ``cohomology``, ``timings``
(only on request), ``verdict`` and ``exit_code``.

Structure constants are listed as ``[i, j, k, c]`` with 1-based indices,
``i <= j`` and zero entries omitted.
"""

from __future__ import annotations

import json
import time
from typing import Any

from .charmap import CharMatrix, validate_nonsingular
from .errors import HypothesisError, IndeterminateRankError
from .nerve import NerveComplex, validate
from .presentation import (ManifoldSpec, RingPresentation,
                           cohomology_presentation, k_presentation)
from .shelling import betti_numbers, cell_dimensions, find_shelling, h_vector
from .specdoc import SpecDocument

REPORT_SCHEMA = "torusk/report@1"
COMMANDS = ("validate", "shell", "present", "cohomology", "report")

EXIT_CONFORMING = 0
EXIT_NONCONFORMING = 2
EXIT_HYPOTHESIS = 3
EXIT_INPUT = 4

VERDICTS = {
    EXIT_CONFORMING: "conforming",
    EXIT_NONCONFORMING: "non-conforming",
    EXIT_HYPOTHESIS: "hypothesis-failure",
    EXIT_INPUT: "input-error",
}


def _exp_str(e) -> str:
    parts = [f"v{i + 1}" if k == 1 else f"v{i + 1}^{k}" for i, k in enumerate(e) if k]
    return "*".join(parts) or "1"


def _ring_section(pres: RingPresentation) -> dict[str, Any]:
    mod = pres.module
    out: dict[str, Any] = {"sr_relations": [p.format(pres.order) for p in pres.sr_relations]}
    if pres.kind == "K":
        out["convention"] = pres.convention
        out["t_relations"] = [{"t": list(tr.t), "relation": tr.format()}
                              for tr in pres.t_relations]
    else:
        out["linear_relations"] = [{"t": list(t), "relation": p.format(pres.order)}
                                   for t, p in pres.linear_relations]
    out["order"] = pres.order
    out["groebner_basis"] = [g.format(pres.order) for g in pres.gb.generators]
    out["rank"] = mod.rank
    out["expected_rank"] = pres.d
    out["free"] = mod.free
    out["torsion"] = list(mod.torsion)
    out["module_method"] = mod.method
    if mod.standard_monomials is not None:
        out["standard_monomials"] = [_exp_str(e) for e in mod.standard_monomials]
    if pres.kind == "H":
        out["graded_ranks"] = pres.graded_ranks
    else:
        out["shelling_basis"] = [_exp_str(e) for e in pres.shelling_basis]
        if pres.certificate is not None:
            out["basis_determinant"] = pres.certificate.determinant
        if pres.structure_constants is not None:
            c = pres.structure_constants
            d = len(c)
            out["structure_constants"] = [[i + 1, j + 1, k + 1, c[i][j][k]]
                                          for i in range(d) for j in range(i, d)
                                          for k in range(d) if c[i][j][k]]
    out["conforming"] = pres.conforming
    out["diagnostics"] = list(pres.diagnostics)
    return out


def run(command: str, doc: SpecDocument, timings: bool = False) -> dict[str, Any]:
    """Execute a pipeline stage and return the report dictionary."""
    if command not in COMMANDS:
        raise ValueError(f"unknown command {command!r}; expected one of {COMMANDS}")
    rep: dict[str, Any] = {"schema": REPORT_SCHEMA, "command": command,
                           "input": doc.to_dict()}
    clock: dict[str, float] = {}
    code = _run_into(rep, command, doc, clock)
    if timings:
        rep["timings"] = {k: round(v, 6) for k, v in clock.items()}
    rep["verdict"] = VERDICTS[code]
    rep["exit_code"] = code
    return rep


def _run_into(rep: dict, command: str, doc: SpecDocument, clock: dict) -> int:
    t0 = time.perf_counter()
    complex = NerveComplex(doc.m, doc.facets)
    lam = CharMatrix(doc.lam, doc.n)
    problems = [str(v) for v in validate(complex)]
    if complex.facets and len(complex.facets[0]) != doc.n and not problems:
        problems.append(f"dimension: facets have {len(complex.facets[0])} vertices, expected n={doc.n}")
    bad = [] if problems else [list(f) for f in validate_nonsingular(lam, complex)]
    rep["validation"] = {"complex": problems, "nonsingular": bad}
    clock["validate"] = time.perf_counter() - t0
    if problems or bad:
        rep["error"] = "input data violates the standing hypotheses"
        return EXIT_HYPOTHESIS
    if command == "validate":
        return EXIT_CONFORMING
    spec = ManifoldSpec(complex, lam, doc.names)

    t0 = time.perf_counter()
    sh = find_shelling(complex)
    clock["shell"] = time.perf_counter() - t0
    if sh is None:
        rep["shelling"] = None
        rep["error"] = "no shelling"
        return EXIT_HYPOTHESIS
    rep["shelling"] = {"order": [list(f) for f in sh.order],
                       "restrictions": [list(r) for r in sh.restrictions]}
    rep["h_vector"] = list(h_vector(sh))
    rep["cell_dimensions"] = cell_dimensions(sh, doc.n)
    rep["betti"] = betti_numbers(sh)
    if command == "shell":
        return EXIT_CONFORMING

    ok = True
    try:
        if command in ("present", "report"):
            t0 = time.perf_counter()
            kp = k_presentation(spec, doc.extra_t, doc.order, doc.convention,
                                doc.bound, shelling=sh)
            clock["present"] = time.perf_counter() - t0
            rep["k_theory"] = _ring_section(kp)
            ok = ok and kp.conforming
        if command in ("cohomology", "report"):
            t0 = time.perf_counter()
            hp = cohomology_presentation(spec, doc.order, shelling=sh)
            clock["cohomology"] = time.perf_counter() - t0
            rep["cohomology"] = _ring_section(hp)
            ok = ok and hp.conforming
    except IndeterminateRankError as exc:
        rep["error"] = f"indeterminate rank: {exc}"
        return EXIT_NONCONFORMING
    except HypothesisError as exc:
        rep["error"] = str(exc)
        return EXIT_HYPOTHESIS
    return EXIT_CONFORMING if ok else EXIT_NONCONFORMING


def to_json(rep: dict[str, Any]) -> str:
    return json.dumps(rep, indent=2) + "\n"


def to_text(rep: dict[str, Any]) -> str:
    lines = [f"{rep['command']}: {rep['verdict']} (exit {rep['exit_code']})"]
    inp = rep["input"]
    lines.append(f"input: n={inp['n']} m={inp['m']} facets={inp['facets']}")
    lines.append(f"       lambda={inp['lambda']}")
    val = rep.get("validation", {})
    for p in val.get("complex", []):
        lines.append(f"complex violation: {p}")
    for f in val.get("nonsingular", []):
        lines.append(f"nonsingularity fails on face {f}")
    if "shelling" in rep:
        sh = rep["shelling"]
        if sh is None:
            lines.append("shelling: none")
        else:
            lines.append(f"shelling: {sh['order']}")
            lines.append(f"restrictions: {sh['restrictions']}")
            lines.append(f"h-vector: {rep['h_vector']}  betti (even degrees): {rep['betti']}")
            lines.append(f"cell dimensions: {rep['cell_dimensions']}")
    for name, title in (("k_theory", "K-ring"), ("cohomology", "cohomology")):
        sec = rep.get(name)
        if not sec:
            continue
        lines.append(f"{title}: rank {sec['rank']} (expected {sec['expected_rank']}), "
                     f"free={sec['free']}, torsion={sec['torsion']}")
        lines.append(f"  SR relations: {', '.join(sec['sr_relations']) or 'none'}")
        for r in sec.get("t_relations", []) + sec.get("linear_relations", []):
            lines.append(f"  t={r['t']}: {r['relation']}")
        lines.append(f"  Groebner basis ({sec['order']}): {'; '.join(sec['groebner_basis'])}")
        if "graded_ranks" in sec:
            lines.append(f"  graded ranks: {sec['graded_ranks']}")
        if "shelling_basis" in sec:
            lines.append(f"  shelling basis: {', '.join(sec['shelling_basis'])}")
        if "basis_determinant" in sec:
            lines.append(f"  change-of-basis determinant: {sec['basis_determinant']}")
        if "structure_constants" in sec:
            terms = [f"b{i}*b{j} -> {c}*b{k}" for i, j, k, c in sec["structure_constants"]
                     if i > 1]
            lines.append(f"  products: {'; '.join(terms) or 'all vanish'}")
        for dgn in sec["diagnostics"]:
            lines.append(f"  note: {dgn}")
    if "error" in rep:
        lines.append(f"error: {rep['error']}")
    if "timings" in rep:
        lines.append("timings: " + ", ".join(f"{k}={v:.3f}s" for k, v in rep["timings"].items()))
    return "\n".join(lines) + "\n"
