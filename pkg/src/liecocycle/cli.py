"""Command-line front end: JSON in, one JSON report out.

Exit codes: 0 on success, 2 when a verification fails, 1 on usage or input
errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Callable

import numpy as np

from . import fixtures as fx_mod
from ._linalg import TOL_ALG, TOL_FD, TOL_RANK, TOL_VERIFY
from .cocycle import (
    from_ce_cocycle,
    holonomy_defect,
    theta_word,
    verify_cocycle_identity,
    verify_symplectic_identity,
)
from .cohomology import TwoCochain, ce_residual, h2_report
from .errors import LieCocycleError
from .extension import central_extend
from .orbits import affine_form_invariance, affine_stabilizer, correspondence_check, stabilizer
from .presymplectic import DEFAULT_STEP, LeftInvariantTwoForm, neeb_verify
from .sampling import DEFAULT_SEED
from .serialization import load_algebra, load_cochain, load_fixture, load_rep, load_word, parse_covector

EXIT_OK, EXIT_INPUT, EXIT_FAIL = 0, 1, 2

COMMANDS = ("check", "h2", "extend", "theta", "orbit", "affine-orbit", "neeb", "holonomy", "fixture", "correspond")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; 2 is reserved for failed checks here
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _positive_float(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("must be > 0")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="liecocycle", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--algebra", metavar="PATH")
    p.add_argument("--cocycle", metavar="PATH")
    p.add_argument("--fixture", metavar="PATH")
    p.add_argument("--rep", metavar="PATH")
    p.add_argument("--word", metavar="PATH")
    p.add_argument("--alpha", metavar="X1,...,XN")
    p.add_argument("--samples", type=_positive_int, default=None, metavar="N")
    p.add_argument("--step", type=_positive_float, default=DEFAULT_STEP, metavar="S")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, metavar="K")
    p.add_argument("--tol-verify", type=_positive_float, default=TOL_VERIFY, metavar="T")
    return p


class _Run:
    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.tol = args.tol_verify
        self.samples = args.samples if args.samples is not None else (200 if args.command == "neeb" else 100)

    def require(self, name: str) -> str:
        value = getattr(self.args, name)
        if value is None:
            raise UsageError(f"command {self.args.command!r} requires --{name}")
        return value

    def algebra(self):
        return load_algebra(self.require("algebra"))

    def cochain(self, L, required: bool = True) -> TwoCochain:
        if self.args.cocycle is None and not required:
            return TwoCochain.zero(L.dim)
        return load_cochain(self.require("cocycle"), L.dim)

    def alpha(self, L) -> np.ndarray:
        if self.args.alpha is None:
            return np.zeros(L.dim)
        return parse_covector(self.args.alpha, L.dim)

    # each command returns (result document, passed)

    def check(self):
        L = self.algebra()
        result: dict[str, Any] = {"algebra": {"name": L.name, "dim": L.dim, "jacobi_residual": L.jacobi_residual}}
        passed = True
        if self.args.cocycle is not None:
            res = ce_residual(L, self.cochain(L))
            result["cocycle"] = {"ce_residual": res, "is_cocycle": res <= self.tol}
            passed &= res <= self.tol
        if self.args.rep is not None:
            rep = load_rep(self.args.rep, L)
            result["rep"] = {"dim_rep": rep.dim_rep, "homomorphism_residual": rep.homomorphism_residual()}
        return result, passed

    def h2(self):
        return h2_report(self.algebra()).to_json(), True

    def extend(self):
        L = self.algebra()
        return central_extend(L, self.cochain(L), self.tol).extended.to_json(), True

    def theta(self):
        L = self.algebra()
        s = from_ce_cocycle(L, self.cochain(L), self.tol)
        w = load_word(self.require("word"), L.dim)
        seed = self.args.seed
        cyc = verify_cocycle_identity(s, self.samples, seed, self.tol)
        sym = verify_symplectic_identity(s, self.samples, seed, self.tol)
        result = {
            "theta": theta_word(s, w).tolist(),
            "cocycle_identity": cyc.to_json(),
            "symplectic_identity": sym.to_json(),
        }
        return result, cyc.passed and sym.passed

    def orbit(self):
        L = self.algebra()
        return stabilizer(L, self.alpha(L)).to_json(), True

    def affine_orbit(self):
        L = self.algebra()
        c = self.cochain(L)
        s = from_ce_cocycle(L, c, self.tol)
        alpha = self.alpha(L)
        result = affine_stabilizer(L, c, alpha).to_json()
        inv = affine_form_invariance(L, s, alpha, self.samples, self.args.seed, self.tol)
        result["form_invariance"] = inv.to_json()
        return result, inv.passed

    def neeb(self):
        if self.args.fixture is not None:
            fx = load_fixture(self.args.fixture)
            L, c = fx.algebra, fx_mod.fixture_cocycle(fx)
        else:
            L = self.algebra()
            c = self.cochain(L)
        form = LeftInvariantTwoForm(L, c, self.tol)
        s = from_ce_cocycle(L, c, self.tol)
        report = neeb_verify(form, s, self.samples, self.args.step, self.args.seed, TOL_FD, self.tol)
        return report.to_json(), report.passed

    def holonomy(self):
        L = self.algebra()
        s = from_ce_cocycle(L, self.cochain(L), self.tol)
        rep = load_rep(self.require("rep"), L)
        w = load_word(self.require("word"), L.dim)
        defect = holonomy_defect(s, rep, w, self.tol)
        norm = float(np.linalg.norm(defect))
        return {"defect": defect.tolist(), "norm": norm, "descends": norm <= self.tol}, True

    def fixture(self):
        fx = load_fixture(self.require("fixture"))
        c = fx_mod.fixture_cocycle(fx)
        E = central_extend(fx.algebra, c, self.tol)
        s = from_ce_cocycle(fx.algebra, c, self.tol)
        seed = self.args.seed
        checks = {
            "theta_consistency": fx_mod.theta_consistency_check(fx, self.samples, seed, self.tol),
            "extended_comoment": fx_mod.extended_comoment_check(fx, E, self.samples, seed, self.tol),
            "hat_mu_equivariance": fx_mod.hat_mu_equivariance_check(fx, E, s, self.samples, seed, self.tol),
            "form_identity": fx_mod.theorem_a_form_check(fx, E, self.samples, seed, self.tol),
        }
        equiv = fx_mod.hamiltonian_equivalence(fx, self.samples, seed, self.tol)
        result = {
            "name": fx.name,
            "cocycle": c.to_json(),
            "invariants": fx.invariant_residuals(),
            "checks": {k: v.to_json() for k, v in checks.items()},
            "hamiltonian": equiv.to_json(),
        }
        return result, all(v.passed for v in checks.values()) and equiv.consistent

    def correspond(self):
        L = self.algebra()
        c = self.cochain(L)
        E = central_extend(L, c, self.tol)
        s = from_ce_cocycle(L, c, self.tol)
        report = correspondence_check(E, s, self.alpha(L), self.samples, self.args.seed, self.tol)
        return report.to_json(), report.passed


def _handler(run: _Run, command: str) -> Callable[[], tuple[dict, bool]]:
    return getattr(run, command.replace("-", "_"))


def _to_builtin(obj: Any) -> Any:
    if isinstance(obj, dict):
        return {str(k): _to_builtin(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_to_builtin(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _to_builtin(obj.tolist())
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    return obj


def run(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    r = _Run(args)
    inputs = {
        k: getattr(args, k)
        for k in ("algebra", "cocycle", "fixture", "rep", "word", "alpha")
        if getattr(args, k) is not None
    }
    inputs["samples"] = r.samples
    inputs["step"] = args.step
    report = {
        "command": args.command,
        "inputs": inputs,
        "seed": args.seed,
        "tolerances": {"tol_alg": TOL_ALG, "tol_verify": r.tol, "tol_rank": TOL_RANK, "tol_fd": TOL_FD},
    }
    try:
        result, passed = _handler(r, args.command)()
    except (UsageError, LieCocycleError) as exc:
        report["error"] = {"type": type(exc).__name__, "message": str(exc)}
        residual = getattr(exc, "residual", None)
        if residual is not None:
            report["error"]["residual"] = residual
        report["result"] = None
        code = EXIT_INPUT
    else:
        report["result"] = result
        report["pass"] = bool(passed)
        code = EXIT_OK if passed else EXIT_FAIL
    out.write(json.dumps(_to_builtin(report), sort_keys=True, indent=2) + "\n")
    if code == EXIT_INPUT:
        print(f"liecocycle: {report['error']['message']}", file=sys.stderr)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
