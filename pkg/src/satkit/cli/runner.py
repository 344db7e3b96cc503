"""Execute parsed scripts and collect report records."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any

from satkit.algebra import AffineAlgebra, AlgebraError, AlgebraMorphism
from satkit.classify import classify, is_isomorphism, regulous_member, seminormality_status
from satkit.cli.parser import Command, MapDecl, RingDecl, Script, ScriptError, format_statement
from satkit.groebner import normal_form
from satkit.ideals import ideal_member, radical_member
from satkit.poly import MonomialOrder, PolyRing
from satkit.saturation import DEFAULT_DEGREE_BOUND, saturation_scan, saturation_verdict

TRUSTED_BANNER = "irreducible (relation ideals assumed prime, not verified)"


@dataclass
class Config:
    format: str = "human"
    degree_bound: int = DEFAULT_DEGREE_BOUND
    order: str = "grevlex"
    no_timing: bool = False


@dataclass
class Record:
    command: str
    inputs: dict[str, Any]
    verdict: Any
    certificate: Any
    elapsed_ms: float | None = None
    line: int = 0
    kind: str = ""

    def as_dict(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "verdict": self.verdict,
            "certificate": self.certificate,
            "elapsed_ms": self.elapsed_ms,
        }


@dataclass
class Report:
    records: list[Record] = field(default_factory=list)
    error: ScriptError | None = None

    @property
    def exit_code(self) -> int:
        return 0 if self.error is None else self.error.exit_code


class ScriptDomainError(ScriptError):
    exit_code = 1


class _Runner:
    def __init__(self, config: Config):
        self.config = config
        self.algebras: dict[str, AffineAlgebra] = {}
        self.maps: dict[str, AlgebraMorphism] = {}

    def run(self, stmt) -> tuple[dict, Any, Any, str]:
        if isinstance(stmt, RingDecl):
            return self.ring(stmt)
        if isinstance(stmt, MapDecl):
            return self.map(stmt)
        return getattr(self, "cmd_" + stmt.verb.replace("-", "_"))(stmt)

    def ring(self, s: RingDecl):
        ring = PolyRing(s.variables, MonomialOrder(self.config.order))
        alg = AffineAlgebra(ring, list(s.relations), s.name)
        self.algebras[s.name] = alg
        inputs = {"ring": s.name, "variables": list(s.variables), "relations": [str(r) for r in s.relations]}
        gb = alg.groebner()
        return inputs, "declared", {"groebner_size": len(gb)}, "ring"

    def map(self, s: MapDecl):
        m = AlgebraMorphism(self.algebras[s.source], self.algebras[s.target], list(s.images))
        self.maps[s.name] = m
        inputs = {"map": s.name, "source": s.source, "target": s.target, "images": [str(i) for i in s.images]}
        return inputs, "declared", "well-defined: every source relation maps into the target relations", "map"

    def degree(self, s: Command) -> int:
        return self.config.degree_bound if s.degree is None else s.degree

    def cmd_gb(self, s: Command):
        alg = self.algebras[s.target]
        gb = alg.groebner()
        cert = {"size": len(gb), "order": str(alg.ambient.order)}
        return {"ring": s.target}, [str(g) for g in gb], cert, "gb"

    def cmd_member(self, s: Command):
        alg = self.algebras[s.target]
        nf = normal_form(s.poly, alg.groebner())
        return {"ring": s.target, "f": str(s.poly)}, nf.is_zero(), f"NF = {nf}", "member"

    def cmd_radical_member(self, s: Command):
        alg = self.algebras[s.target]
        f = s.poly
        inputs = {"ring": s.target, "f": str(f)}
        if ideal_member(f, alg.relations):
            return inputs, True, "f ∈ I", "radical-member"
        if radical_member(f, alg.relations):
            gb = alg.groebner()
            power = f
            for k in range(2, 9):
                power = normal_form(power * f, gb)
                if not power:
                    return inputs, True, f"f^{k} ∈ I, f ∉ I", "radical-member"
            return inputs, True, "1 ∈ I + (1 - t·f)", "radical-member"
        return inputs, False, "1 ∉ I + (1 - t·f)", "radical-member"

    def cmd_kernel(self, s: Command):
        m = self.maps[s.target]
        gb = m.kernel.groebner()
        cert = {"extension": m.is_extension}
        return {"map": s.target}, [str(g) for g in gb] or ["0"], cert, "kernel"

    def cmd_classify(self, s: Command):
        m = self.maps[s.target]
        bound = self.degree(s)
        r = classify(m, bound)
        verdict = r.flags()
        verdict["seminormal_in"] = None if r.seminormal_in is None else str(r.seminormal_in)
        cert = {
            "generic_degrees": r.generic_degrees,
            "consistency_violations": r.consistency_violations,
            "trusted": TRUSTED_BANNER,
        }
        return {"map": s.target, "degree_bound": bound}, verdict, cert, "classify"

    def cmd_sat_member(self, s: Command):
        m = self.maps[s.target]
        v = saturation_verdict(s.poly, m)
        return {"map": s.target, "f": str(s.poly)}, v.member, v.certificate(), "sat-member"

    def cmd_scan_saturation(self, s: Command):
        m = self.maps[s.target]
        bound = self.degree(s)
        rep = saturation_scan(m, bound)

        def row(f):
            d = {"element": str(f.element), "in_image": f.in_image}
            d["preimage"] = None if f.preimage is None else str(f.preimage)
            if f.nilpotency is not None:
                d["nilpotency"] = f.nilpotency
            return d

        verdict = {
            "linear": [row(f) for f in rep.linear],
            "radical": [row(f) for f in rep.radical],
            "outside_image": [str(f.element) for f in rep.outside_image],
        }
        cert = {"candidates": len(rep.candidates), "caveat": rep.caveat}
        return {"map": s.target, "degree_bound": bound}, verdict, cert, "scan-saturation"

    def cmd_seminormal(self, s: Command):
        m = self.maps[s.target]
        bound = self.degree(s)
        st = seminormality_status(m, bound)
        if st.kind == "No":
            cert = f"{st.witness} is subintegral over the source but not in its image"
        elif st.kind == "Yes":
            cert = "every target generator lies in the image"
        else:
            cert = f"no subintegral element outside the image among candidates of degree <= {bound}"
        return {"map": s.target, "degree_bound": bound}, str(st), cert, "seminormal"

    def cmd_regulous(self, s: Command):
        m = self.maps[s.via]
        X = self.algebras[s.target]
        ok = regulous_member(s.poly, X, m)
        cert = {"saturation": saturation_verdict(s.poly, m).certificate(), "trusted": TRUSTED_BANNER}
        return {"ring": s.target, "via": s.via, "f": str(s.poly)}, ok, cert, "regulous"

    def cmd_iso(self, s: Command):
        m = self.maps[s.target]
        ok = is_isomorphism(m)
        if not m.is_extension:
            cert = f"kernel {m.kernel} is larger than the source relations"
        else:
            pre = {v: m.preimage(g) for v, g in zip(m.target.variables, m.target.gens)}
            missing = [v for v, p in pre.items() if p is None]
            if missing:
                cert = f"no preimage for {', '.join(missing)}"
            else:
                cert = {v: str(p) for v, p in pre.items()}
        return {"map": s.target}, ok, cert, "iso"


def execute_script(script: Script, config: Config | None = None) -> Report:
    config = config or Config()
    runner = _Runner(config)
    report = Report()
    for stmt in script:
        start = time.perf_counter()
        try:
            inputs, verdict, cert, kind = runner.run(stmt)
        except AlgebraError as exc:
            report.error = ScriptDomainError(f"{type(exc).__name__}: {exc}", stmt.loc.line, stmt.loc.column)
            break
        elapsed = None if config.no_timing else round((time.perf_counter() - start) * 1000, 3)
        report.records.append(
            Record(format_statement(stmt), inputs, verdict, cert, elapsed, stmt.loc.line, kind)
        )
    return report
