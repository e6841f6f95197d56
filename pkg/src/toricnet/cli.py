"""Command-line front end: every analysis behind one deterministic binary.

Exit codes: 0 success, 1 bad input (including unknown flags and unreadable
files), 2 domain refusal. Refusals always emit machine-readable
{"error": {"kind": ..., "detail": ...}} regardless of --format.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .errors import DomainRefusal, InputError
from .render import (
    frac_str,
    ncf_json,
    qsf_json,
    render_ncf,
    render_qsf,
    render_sym,
    render_tensor,
    render_word,
    sym_json,
    tensor_json,
    value_str,
)

DEFAULT_ORDER = 8


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; 2 is reserved for domain refusals here
    def error(self, message):
        raise InputError(message)


def _emit(payload: dict, text_lines: list, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False))
    else:
        for line in text_lines:
            print(line)


def _read_source(spec_arg: str) -> str:
    if spec_arg == "-":
        return sys.stdin.read()
    if "->" in spec_arg or "\n" in spec_arg:
        return spec_arg
    if os.path.isfile(spec_arg):
        with open(spec_arg, encoding="utf-8") as fh:
            return fh.read()
    raise InputError(f"cannot read {spec_arg!r}: not a file and not reaction text")


def _read_json(path: str) -> dict:
    if not os.path.isfile(path):
        raise InputError(f"cannot read {path!r}")
    with open(path, encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except ValueError as exc:
            raise InputError(f"malformed JSON in {path}: {exc}") from exc


def _parse_bindings(text: str | None) -> dict | None:
    if text is None:
        return None
    out = {}
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        if "=" not in item:
            raise InputError(f"binding {item!r} is not name=value")
        name, _, value = item.partition("=")
        try:
            out[name.strip()] = Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad rational {value!r}") from exc
    return out


def _parse_ints(text: str) -> tuple:
    try:
        return tuple(int(p) for p in text.split(",") if p.strip())
    except ValueError as exc:
        raise InputError(f"expected comma-separated integers, got {text!r}") from exc


def _parse_fracs(text: str) -> list:
    try:
        return [Fraction(p.strip()) for p in text.split(",") if p.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"expected comma-separated rationals, got {text!r}") from exc


def _parse_floats(text: str) -> list:
    try:
        return [float(p) for p in text.split(",") if p.strip()]
    except ValueError as exc:
        raise InputError(f"expected comma-separated numbers, got {text!r}") from exc


# ---------------------------------------------------------------- crn


def _load_network(arg: str):
    from .crn import parse_network

    return parse_network(_read_source(arg))


def _cmd_crn_analyze(args) -> int:
    from .crn import analyze

    net = _load_network(args.input)
    info = analyze(net)
    payload = {
        "species": list(net.species),
        "complexes": [net.complex_label(i) for i in range(net.n_complexes)],
        "n_complexes": net.n_complexes,
        "linkage_classes": [list(c) for c in info.linkage_classes],
        "n_linkage_classes": len(info.linkage_classes),
        "strong_components": [list(c) for c in info.strong_components],
        "weakly_reversible": info.weakly_reversible,
        "stoichiometric_rank": info.stoich_rank,
        "deficiency": info.deficiency,
        "cayley": [list(row) for row in info.cayley],
    }
    lines = [
        "species: " + " ".join(net.species),
        "complexes: " + ", ".join(payload["complexes"]),
        f"n = {net.n_complexes}",
        f"l = {len(info.linkage_classes)}",
        f"s = {info.stoich_rank}",
        f"deficiency = {info.deficiency}",
        "weakly reversible: " + ("yes" if info.weakly_reversible else "no"),
        "cayley:",
    ] + ["  " + " ".join(str(x) for x in row) for row in info.cayley]
    _emit(payload, lines, args.format)
    return 0


def _cmd_crn_trees(args) -> int:
    from .crn import tree_constants

    net = _load_network(args.input)
    consts = tree_constants(net, _parse_bindings(args.bindings))
    payload = {
        "tree_constants": [
            {"complex": net.complex_label(i), "value": value_str(v)}
            for i, v in enumerate(consts)
        ]
    }
    lines = [
        f"K[{i + 1}] ({net.complex_label(i)}) = {value_str(v)}"
        for i, v in enumerate(consts)
    ]
    _emit(payload, lines, args.format)
    return 0


def _cmd_crn_ideal(args) -> int:
    from .crn import toric_binomials

    net = _load_network(args.input)
    bins = toric_binomials(net)
    payload = {
        "binomials": [
            {"u_plus": list(b.u_plus), "u_minus": list(b.u_minus), "text": b.text}
            for b in bins
        ]
    }
    lines = [b.text for b in bins] if bins else ["(no binomials: kernel is trivial)"]
    _emit(payload, lines, args.format)
    return 0


def _cmd_crn_steady(args) -> int:
    from .crn import birch_point

    net = _load_network(args.input)
    st = birch_point(net, _parse_bindings(args.bindings), tol=args.tol)
    payload = {
        "concentrations": {
            s: c for s, c in zip(net.species, st.concentrations)
        },
        "residual": st.residual,
        "normalization": st.normalization,
    }
    lines = [
        f"{s} = {c:.12g}" for s, c in zip(net.species, st.concentrations)
    ] + [f"residual = {st.residual:.3e}", f"normalization = {st.normalization}"]
    _emit(payload, lines, args.format)
    return 0


def _cmd_crn_simulate(args) -> int:
    from .crn import simulate

    net = _load_network(args.input)
    c0 = _parse_floats(args.c0)
    traj = simulate(
        net,
        _parse_bindings(args.bindings),
        c0,
        t_end=args.t_end,
        dt=args.dt,
        record_every=args.record_every,
    )
    payload = {
        "t_end": traj.times[-1],
        "steps_recorded": len(traj.times),
        "final": {s: c for s, c in zip(net.species, traj.final)},
    }
    lines = [f"t = {traj.times[-1]:.6g} after {len(traj.times)} recorded steps"] + [
        f"{s} = {c:.12g}" for s, c in zip(net.species, traj.final)
    ]
    _emit(payload, lines, args.format)
    return 0


def _cmd_crn_toric(args) -> int:
    from .torictop import crn_to_toric

    net = _load_network(args.input)
    q, cls = crn_to_toric(net)
    payload = {
        "facets": [list(f) for f in q.complex.facets],
        "lambda": [list(r) for r in q.lam],
        "base_facet": list(q.base_facet),
        "mxi": _mxi_json(cls),
    }
    lines = [
        "facets: " + ", ".join("{" + ",".join(str(v) for v in f) + "}" for f in q.complex.facets),
        "lambda:",
    ] + ["  " + " ".join(str(x) for x in row) for row in q.lam] + [
        "mxi: " + render_ncf(cls.to_ncf())
    ]
    _emit(payload, lines, args.format)
    return 0


# ---------------------------------------------------------------- qsym / sym


def _cmd_qsym_product(args) -> int:
    from .ncsf import QSF, qsym_product

    out = qsym_product(QSF.monomial(_parse_ints(args.left)), QSF.monomial(_parse_ints(args.right)))
    _emit(qsf_json(out), [render_qsf(out)], args.format)
    return 0


def _cmd_qsym_pair(args) -> int:
    from .ncsf import NCF, QSF, pairing

    value = pairing(NCF.word(_parse_ints(args.word)), QSF.monomial(_parse_ints(args.comp)))
    payload = {"value": frac_str(value)}
    _emit(payload, [frac_str(value)], args.format)
    return 0


def _cmd_qsym_realize(args) -> int:
    from .ncsf import qsym_realize

    poly = qsym_realize(_parse_ints(args.comp), args.nvars)
    payload = {"polynomial": poly.render(), "nvars": args.nvars}
    _emit(payload, [poly.render()], args.format)
    return 0


def _parse_sym_element(text: str):
    from .ncsf import SymF

    basis, _, parts = text.partition(":")
    basis = basis.strip()
    if not parts:
        raise InputError(f"expected basis:parts like e:2,1, got {text!r}")
    return SymF.element(basis, _parse_ints(parts))


def _cmd_sym_convert(args) -> int:
    from .ncsf import sym_convert

    out = sym_convert(_parse_sym_element(args.element), args.to)
    _emit(sym_json(out), [render_sym(out)], args.format)
    return 0


def _cmd_sym_pair(args) -> int:
    from .ncsf import hall_pairing

    value = hall_pairing(_parse_sym_element(args.left), _parse_sym_element(args.right))
    _emit({"value": frac_str(value)}, [frac_str(value)], args.format)
    return 0


# ---------------------------------------------------------------- hopf


def _cmd_hopf_coproduct(args) -> int:
    if args.algebra == "bfk":
        from .hopfdiff import bfk_coproduct_gen

        t = bfk_coproduct_gen(args.degree)
        text = f"Δ(Z[{args.degree}]) = {render_tensor(t)}"
        _emit({"coproduct": tensor_json(t)}, [text], args.format)
    else:
        from .hopfdiff import ln_coproduct_gen

        p = ln_coproduct_gen(args.degree)
        text = f"Δ(t{args.degree}) = {p.render()}"
        _emit({"coproduct": p.render()}, [text], args.format)
    return 0


def _cmd_hopf_antipode(args) -> int:
    if args.algebra == "bfk":
        from .hopfdiff import bfk_antipode_gen

        x = bfk_antipode_gen(args.degree)
        text = f"χ(Z[{args.degree}]) = {render_ncf(x)}"
        _emit({"antipode": ncf_json(x)}, [text], args.format)
    else:
        from .hopfdiff import ln_antipode_gen

        p = ln_antipode_gen(args.degree)
        text = f"χ(t{args.degree}) = {p.render()}"
        _emit({"antipode": p.render()}, [text], args.format)
    return 0


def _hopf_checks(algebra: str, max_weight: int) -> list:
    checks = []
    if algebra == "bfk":
        from .ncsf import NCF
        from .hopfdiff import bfk_coassociativity_gap, bfk_convolution, bfk_counit

        for n in range(1, max_weight + 1):
            gen = NCF.gen(n)
            gap = bfk_coassociativity_gap(gen)
            checks.append((f"coassociativity Z[{n}]", all(c == 0 for c in gap.values())))
            for left in (True, False):
                conv = bfk_convolution(gen, left_antipode=left)
                side = "left" if left else "right"
                checks.append((f"antipode {side} Z[{n}]", conv == NCF.zero()))
            checks.append((f"counit Z[{n}]", bfk_counit(gen) == 0))
    else:
        from .exactcore import SparsePoly
        from .hopfdiff import ln_coassociativity_gap, ln_convolution, ln_counit

        for n in range(1, max_weight + 1):
            gap = ln_coassociativity_gap(n)
            checks.append((f"coassociativity t{n}", gap.is_constant() and gap.constant_value() == 0))
            gen = SparsePoly.variable(f"t{n}")
            for left in (True, False):
                conv = ln_convolution(gen, left_antipode=left)
                side = "left" if left else "right"
                checks.append(
                    (f"antipode {side} t{n}", conv.is_constant() and conv.constant_value() == 0)
                )
            checks.append((f"counit t{n}", ln_counit(gen) == 0))
    return checks


def _cmd_hopf_verify(args) -> int:
    checks = _hopf_checks(args.algebra, args.max_weight)
    payload = {"algebra": args.algebra, "checks": [{"name": n, "ok": ok} for n, ok in checks]}
    lines = [f"{name}: {'ok' if ok else 'FAIL'}" for name, ok in checks]
    _emit(payload, lines, args.format)
    return 0 if all(ok for _, ok in checks) else 1


def _cmd_hopf_fgl(args) -> int:
    from .hopfdiff import (
        fgl_associativity_defect,
        fgl_commutative_ok,
        fgl_over_N,
        fgl_unit_ok,
    )

    order = args.order
    f = fgl_over_N(order)
    xy = f.coeffs.get((1, 1))
    unit = fgl_unit_ok(order)
    comm = fgl_commutative_ok(order)
    defect = fgl_associativity_defect(order)
    payload = {
        "order": order,
        "unit": unit,
        "commutative": comm,
        "xy_coefficient": ncf_json(xy),
        "associative": defect is None,
    }
    lines = [
        f"unit: {'ok' if unit else 'FAIL'}",
        f"commutative: {'ok' if comm else 'FAIL'}",
        f"coefficient of x·y: {render_ncf(xy)}",
    ]
    if defect is None:
        payload["associativity_defect"] = None
        lines.append(f"associative through order {order}: ok")
    else:
        exponents, coeff = defect
        payload["associativity_defect"] = {
            "monomial": list(exponents),
            "coeff": ncf_json(coeff),
        }
        mono = "·".join(
            f"{v}^{e}" if e > 1 else v
            for v, e in zip(("x", "y", "z"), exponents)
            if e
        )
        lines.append(f"associative: FAIL, first defect at {mono}: {render_ncf(coeff)}")
    _emit(payload, lines, args.format)
    return 0


def _cmd_hopf_coaction(args) -> int:
    from .hopfdiff import mu_b_image, mu_log_image

    if args.target == "log-generators":
        p = mu_log_image(args.degree)
    else:
        p = mu_b_image(args.degree)
    payload = {"target": args.target, "image": p.render()}
    _emit(payload, [f"μ(t{args.degree}) = {p.render()}"], args.format)
    return 0


# ---------------------------------------------------------------- freeprob


def _cmd_freeprob_free(args) -> int:
    from .freeprob import free_cumulants_to_moments, moments_to_free_cumulants

    if (args.moments is None) == (args.cumulants is None):
        raise InputError("give exactly one of --moments or --cumulants")
    if args.moments is not None:
        out = moments_to_free_cumulants(_parse_fracs(args.moments))
        key = "free_cumulants"
    else:
        out = free_cumulants_to_moments(_parse_fracs(args.cumulants))
        key = "moments"
    payload = {key: [frac_str(v) for v in out]}
    _emit(payload, [f"{key}: " + ", ".join(frac_str(v) for v in out)], args.format)
    return 0


def _cmd_freeprob_classical(args) -> int:
    from .freeprob import classical_cumulants, classical_cumulants_to_moments

    if (args.moments is None) == (args.cumulants is None):
        raise InputError("give exactly one of --moments or --cumulants")
    if args.moments is not None:
        out = classical_cumulants(_parse_fracs(args.moments))
        key = "classical_cumulants"
    else:
        out = classical_cumulants_to_moments(_parse_fracs(args.cumulants))
        key = "moments"
    payload = {key: [frac_str(v) for v in out]}
    _emit(payload, [f"{key}: " + ", ".join(frac_str(v) for v in out)], args.format)
    return 0


def _cmd_freeprob_hirzebruch(args) -> int:
    from .freeprob import hirzebruch_K

    coeffs = _parse_fracs(args.log)
    order = args.order if args.order is not None else len(coeffs)
    ks = hirzebruch_K(coeffs, order)
    payload = {"K": [frac_str(v) for v in ks]}
    lines = [f"K{i} = {frac_str(v)}" for i, v in enumerate(ks)]
    _emit(payload, lines, args.format)
    return 0


def _cmd_freeprob_ncseries(args) -> int:
    from .freeprob import nc_cumulant_series

    series = nc_cumulant_series(args.order)
    def coeff_rows(ts):
        rows = []
        for n in range(1, args.order + 1):
            c = ts.coeffs.get((n,))
            if c is None:
                continue
            rows.append((n, c))
        return rows

    payload = {
        "raw": [{"n": n, "value": ncf_json(c)} for n, c in coeff_rows(series.raw)],
        "normalized": [
            {"n": n, "value": ncf_json(c)} for n, c in coeff_rows(series.normalized)
        ],
    }
    lines = ["raw:"] + [
        f"  [x^{n}] = {render_ncf(c)}" for n, c in coeff_rows(series.raw)
    ] + ["normalized:"] + [
        f"  k[{n}] = {render_ncf(c)}" for n, c in coeff_rows(series.normalized)
    ]
    _emit(payload, lines, args.format)
    return 0


# ---------------------------------------------------------------- toric


def _mxi_json(cls) -> dict:
    return {
        "degree": cls.degree,
        "table": [
            {"composition": list(a), "value": frac_str(v)} for a, v in cls.table
        ],
        "class": ncf_json(cls.to_ncf()),
    }


def _load_quasitoric(path: str, flip: bool):
    from .torictop import QuasitoricData, SimplicialComplex

    data = _read_json(path)
    try:
        facets = tuple(tuple(int(v) for v in f) for f in data["facets"])
        lam = tuple(tuple(int(v) for v in row) for row in data["lambda"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"quasitoric JSON needs facets and lambda: {exc}") from exc
    m = len(lam[0]) if lam else 0
    return QuasitoricData(SimplicialComplex(m, facets), lam, orientation_flip=flip)


def _load_polytope(path: str):
    from .torictop import DelzantPolytope

    data = _read_json(path)
    try:
        normals = tuple(tuple(int(v) for v in row) for row in data["normals"])
        offsets = tuple(Fraction(v) for v in data["offsets"])
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise InputError(f"polytope JSON needs normals and offsets: {exc}") from exc
    return DelzantPolytope(normals, offsets)


def _cmd_toric_validate(args) -> int:
    q = _load_quasitoric(args.quasitoric, flip=False)
    rep = q.validate()
    payload = {"valid": rep.valid, "checks_run": list(rep.checks_run), "issues": list(rep.issues)}
    lines = [f"valid: {'yes' if rep.valid else 'no'}"] + [
        f"  issue: {msg}" for msg in rep.issues
    ]
    _emit(payload, lines, args.format)
    return 0


def _cmd_toric_charnum(args) -> int:
    from .ncsf import partitions
    from .torictop import (
        chern_numbers,
        delzant_to_quasitoric,
        hamiltonian_numbers,
        mxi_numbers,
    )

    if (args.polytope is None) == (args.quasitoric is None):
        raise InputError("give exactly one of --polytope or --quasitoric")
    u = None
    if args.polytope is not None:
        q, u = delzant_to_quasitoric(_load_polytope(args.polytope))
        if args.orientation_flip:
            from .torictop import QuasitoricData

            q = QuasitoricData(q.complex, q.lam, orientation_flip=True)
    else:
        q = _load_quasitoric(args.quasitoric, flip=args.orientation_flip)
    cls = mxi_numbers(q)
    cherns = [(lam, chern_numbers(q, lam, bundle=args.bundle)) for lam in partitions(q.n)]
    payload = {
        "n": q.n,
        "bundle": args.bundle,
        "mxi": _mxi_json(cls),
        "chern": [
            {"partition": list(lam), "value": frac_str(v)} for lam, v in cherns
        ],
    }
    lines = ["mxi: " + render_ncf(cls.to_ncf())] + [
        f"c[{','.join(str(p) for p in lam)}] = {frac_str(v)}" for lam, v in cherns
    ]
    if u is not None:
        ham = hamiltonian_numbers(q, u, convention=args.convention)
        payload["u"] = [frac_str(x) for x in u]
        payload["hamiltonian"] = {
            "convention": args.convention,
            "table": [
                {"index": list(a), "value": frac_str(v)} for a, v in ham.table
            ],
        }
        lines.append("u: " + ", ".join(frac_str(x) for x in u))
        lines += [
            f"S[{','.join(str(p) for p in a)}] = {frac_str(v)}" for a, v in ham.table
        ]
    _emit(payload, lines, args.format)
    return 0


def _cmd_toric_delzant(args) -> int:
    from .torictop import delzant_to_quasitoric

    q, u = delzant_to_quasitoric(_load_polytope(args.polytope))
    payload = {
        "facets": [list(f) for f in q.complex.facets],
        "lambda": [list(r) for r in q.lam],
        "base_facet": list(q.base_facet),
        "u": [frac_str(x) for x in u],
    }
    lines = [
        "facets: " + ", ".join("{" + ",".join(str(v) for v in f) + "}" for f in q.complex.facets),
        "lambda:",
    ] + ["  " + " ".join(str(x) for x in row) for row in q.lam] + [
        "u: " + ", ".join(frac_str(x) for x in u)
    ]
    _emit(payload, lines, args.format)
    return 0


# ---------------------------------------------------------------- wiring


def _add_format(p) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text")


def build_parser() -> argparse.ArgumentParser:
    root = _Parser(prog="toricnet", description=__doc__.splitlines()[0])
    groups = root.add_subparsers(dest="group", required=True)

    crn = groups.add_parser("crn", help="reaction network analyses").add_subparsers(
        dest="cmd", required=True
    )
    for name, fn in (
        ("analyze", _cmd_crn_analyze),
        ("trees", _cmd_crn_trees),
        ("ideal", _cmd_crn_ideal),
        ("steady", _cmd_crn_steady),
        ("simulate", _cmd_crn_simulate),
        ("toric", _cmd_crn_toric),
    ):
        p = crn.add_parser(name)
        p.add_argument("input", help="reaction file, inline text, or - for stdin")
        _add_format(p)
        p.set_defaults(fn=fn)
        if name in ("trees", "steady", "simulate"):
            p.add_argument("--bindings", help="k1=2,k2=1/3")
        if name == "steady":
            p.add_argument("--tol", type=float, default=1e-9)
        if name == "simulate":
            p.add_argument("--c0", required=True, help="initial concentrations")
            p.add_argument("--t-end", type=float, required=True)
            p.add_argument("--dt", type=float, default=0.01)
            p.add_argument("--record-every", type=int, default=1)

    qsym = groups.add_parser("qsym", help="quasisymmetric functions").add_subparsers(
        dest="cmd", required=True
    )
    p = qsym.add_parser("product")
    p.add_argument("--left", required=True, help="composition, e.g. 1,2")
    p.add_argument("--right", required=True)
    _add_format(p)
    p.set_defaults(fn=_cmd_qsym_product)
    p = qsym.add_parser("pair")
    p.add_argument("--word", required=True, help="Z-word, e.g. 1,2")
    p.add_argument("--comp", required=True, help="M-composition")
    _add_format(p)
    p.set_defaults(fn=_cmd_qsym_pair)
    p = qsym.add_parser("realize")
    p.add_argument("--comp", required=True)
    p.add_argument("--nvars", type=int, required=True)
    _add_format(p)
    p.set_defaults(fn=_cmd_qsym_realize)

    sym = groups.add_parser("sym", help="symmetric functions").add_subparsers(
        dest="cmd", required=True
    )
    p = sym.add_parser("convert")
    p.add_argument("--element", required=True, help="basis:parts, e.g. e:2,1")
    p.add_argument("--to", required=True, choices=("e", "h", "p", "m", "s"))
    _add_format(p)
    p.set_defaults(fn=_cmd_sym_convert)
    p = sym.add_parser("pair")
    p.add_argument("--left", required=True, help="basis:parts")
    p.add_argument("--right", required=True)
    _add_format(p)
    p.set_defaults(fn=_cmd_sym_pair)

    hopf = groups.add_parser("hopf", help="Hopf algebras of diffeomorphisms").add_subparsers(
        dest="cmd", required=True
    )
    p = hopf.add_parser("coproduct")
    p.add_argument("--algebra", choices=("ln", "bfk"), required=True)
    p.add_argument("--degree", type=int, required=True)
    _add_format(p)
    p.set_defaults(fn=_cmd_hopf_coproduct)
    p = hopf.add_parser("antipode")
    p.add_argument("--algebra", choices=("ln", "bfk"), required=True)
    p.add_argument("--degree", type=int, required=True)
    _add_format(p)
    p.set_defaults(fn=_cmd_hopf_antipode)
    p = hopf.add_parser("verify")
    p.add_argument("--algebra", choices=("ln", "bfk"), required=True)
    p.add_argument("--max-weight", type=int, default=6)
    _add_format(p)
    p.set_defaults(fn=_cmd_hopf_verify)
    p = hopf.add_parser("fgl")
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)
    _add_format(p)
    p.set_defaults(fn=_cmd_hopf_fgl)
    p = hopf.add_parser("coaction")
    p.add_argument("--target", choices=("log-generators", "b-series"), required=True)
    p.add_argument("--degree", type=int, required=True)
    _add_format(p)
    p.set_defaults(fn=_cmd_hopf_coaction)

    fp = groups.add_parser("freeprob", help="cumulant transforms").add_subparsers(
        dest="cmd", required=True
    )
    p = fp.add_parser("free")
    p.add_argument("--moments", help="1,m1,m2,... starting at m0 = 1")
    p.add_argument("--cumulants", help="k1,k2,...")
    _add_format(p)
    p.set_defaults(fn=_cmd_freeprob_free)
    p = fp.add_parser("classical")
    p.add_argument("--moments")
    p.add_argument("--cumulants")
    _add_format(p)
    p.set_defaults(fn=_cmd_freeprob_classical)
    p = fp.add_parser("hirzebruch")
    p.add_argument("--log", required=True, help="log coefficients l1,l2,... with l1 = 1")
    p.add_argument("--order", type=int)
    _add_format(p)
    p.set_defaults(fn=_cmd_freeprob_hirzebruch)
    p = fp.add_parser("ncseries")
    p.add_argument("--order", type=int, default=4)
    _add_format(p)
    p.set_defaults(fn=_cmd_freeprob_ncseries)

    toric = groups.add_parser("toric", help="quasitoric data").add_subparsers(
        dest="cmd", required=True
    )
    p = toric.add_parser("validate")
    p.add_argument("--quasitoric", required=True, help="JSON with facets + lambda")
    _add_format(p)
    p.set_defaults(fn=_cmd_toric_validate)
    p = toric.add_parser("charnum")
    p.add_argument("--quasitoric")
    p.add_argument("--polytope")
    p.add_argument("--orientation-flip", action="store_true")
    p.add_argument("--bundle", choices=("tangent", "normal"), default="tangent")
    p.add_argument("--convention", choices=("mxi", "ginzburg"), default="mxi")
    _add_format(p)
    p.set_defaults(fn=_cmd_toric_charnum)
    p = toric.add_parser("delzant")
    p.add_argument("--polytope", required=True)
    _add_format(p)
    p.set_defaults(fn=_cmd_toric_delzant)

    return root


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except DomainRefusal as exc:
        print(json.dumps({"error": exc.payload()}, sort_keys=True))
        return 2
    except InputError as exc:
        print(json.dumps({"error": {"kind": type(exc).__name__, "detail": str(exc)}},
                         sort_keys=True))
        return 1


if __name__ == "__main__":
    sys.exit(main())
