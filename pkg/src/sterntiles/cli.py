"""Command-line interface.

Subcommands: gen (grow a patch), query (automaton random access), verify
(named check suites), render (image from a JSON patch dump), fusc.
Domain errors exit with status 1; usage errors with status 2.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import analysis, automata, lattice, render, sigma, tau, tilings
from .errors import SternTilesError
from .lattice import DOWN, UP, SegPatch, SegTile, TriTile
from .ring import RingSpec, mat_det, mat_pow, identity


def _parse_seed(text: str, modulus: int):
    kind, _, rest = text.partition(":")
    try:
        nums = [int(v) for v in rest.split(",")] if rest else []
    except ValueError:
        raise SternTilesError(f"bad seed {text!r}") from None
    if kind in (UP, DOWN) and len(nums) == 3:
        return TriTile(kind, tuple(nums), modulus)
    if kind == "seg" and len(nums) == 2:
        return SegTile(tuple(nums), modulus)
    if kind == "hex" and len(nums) == 2:
        return ("hex", nums[0], nums[1])
    if kind == "sq" and len(nums) == 4:
        return ("sq", tuple(nums))
    raise SternTilesError(f"bad seed {text!r}")


def _emit(data: bytes | str, out: str | None) -> None:
    if isinstance(data, str):
        data = data.encode()
    if out:
        with open(out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)


def _patch_output(patch, fmt: str, out: str | None) -> None:
    if fmt == "json":
        _emit(lattice.to_json(patch) + "\n", out)
    elif fmt in ("ppm", "svg"):
        _emit(render.render(patch, fmt), out)
    elif fmt == "csv":
        if isinstance(patch, SegPatch):
            _emit(",".join(str(v) for v in patch.values) + "\n", out)
        else:
            lines = [",".join(str(v) for v in row) for row in patch.rows]
            _emit("\n".join(lines) + "\n", out)
    else:
        raise SternTilesError(f"unknown output format {fmt!r}")


def _cmd_gen(args) -> int:
    m = args.modulus
    seed = _parse_seed(args.seed, m)
    k = args.steps
    if args.family == "h":
        if not (isinstance(seed, tuple) and seed[0] == "hex"):
            raise SternTilesError("family h needs a hex:b,c seed")
        patch = tilings.h_patch(seed[1], seed[2], k, m)
    elif args.family == "s":
        patch = tilings.s_patch(seed, k)
    elif args.family == "v":
        if not isinstance(seed, SegTile):
            raise SternTilesError("family v needs a seg:0,y seed")
        patch = tau.v_word(seed.endpoints[1], k, m)
    elif args.family == "w":
        if not isinstance(seed, SegTile):
            raise SternTilesError("family w needs a seg:x,y seed")
        patch = tau.w_word(seed, k)
    else:  # supertile
        if isinstance(seed, SegTile) or args.rule == "tau":
            patch = tau.tau_word(seed, k)
        elif isinstance(seed, tuple) and seed[0] == "sq":
            patch = sigma.square_supertile(seed[1], k, m)
        elif isinstance(seed, tuple):
            raise SternTilesError("hex seeds belong to family h")
        else:
            rule = None if args.rule == "sigma" else sigma.variant_rule(args.rule)
            patch = sigma.supertile(seed, k, rule)
    _patch_output(patch, args.format, args.out)
    return 0


def _tile_doc(t) -> str:
    if isinstance(t, TriTile):
        doc = {"orientation": t.orientation, "corners": list(t.corners),
               "modulus": t.modulus}
    else:
        doc = {"endpoints": list(t.endpoints), "modulus": t.modulus}
    return json.dumps(doc) + "\n"


def _cmd_query(args) -> int:
    m = args.modulus
    k = args.steps
    if args.machine == "M":
        anchor = _parse_seed(args.seed, m)
        if not isinstance(anchor, TriTile):
            raise SternTilesError("machine M needs an up:/down: anchor tile")
        word = sigma.index_to_word(args.position, k, "plane")
        state = automata.run("M", word, m)
        tile = automata.decode_M(state, anchor)
    elif args.machine == "N":
        seed = _parse_seed(args.seed, m)
        if not (isinstance(seed, tuple) and seed[0] == "hex"):
            raise SternTilesError("machine N needs a hex:b,c anchor")
        word = sigma.index_to_word(args.position, k * m, "sector")
        state = automata.run("N", word, m)
        tile = automata.decode_N(state, seed[1], seed[2], args.sector)
    elif args.machine == "O":
        seed = _parse_seed(args.seed, m)
        if not isinstance(seed, SegTile):
            raise SternTilesError("machine O needs a seg:x,y anchor")
        bits = automata.pad_o_bits(args.position, m)
        state = automata.run("O", bits, m)
        tile = automata.decode_O(state, seed)
    else:
        raise SternTilesError(f"unknown machine {args.machine!r}")
    _emit(_tile_doc(tile), args.out)
    return 0


def _suite_matrices(m: int) -> dict[str, bool]:
    from . import ring
    i3 = identity(3, m)
    report = {
        "det": (mat_det(ring.mat_A(m)) == 2 % m
                and all(mat_det(f(m)) == 1 % m
                        for f in (ring.mat_B, ring.mat_C, ring.mat_D))),
        "letter-order": all(mat_pow(f(m), m) == i3
                            for f in (ring.mat_B, ring.mat_C, ring.mat_D)),
        "binary-order": mat_pow(ring.mat_L(m), m) == identity(2, m),
    }
    h = 3 if m == 3 else ring.mult_order(4, RingSpec(m))
    report["central-order"] = mat_pow(ring.mat_A(m), 2 * h) == i3
    return report


def _suite_additivity(m: int) -> dict[str, bool]:
    import random

    from .lattice import patch_add, patch_equal, patch_scale
    rng = random.Random(7)
    ok = True
    for _ in range(20):
        a = TriTile(UP, tuple(rng.randrange(m) for _ in range(3)), m)
        b = TriTile(UP, tuple(rng.randrange(m) for _ in range(3)), m)
        lhs = patch_add(sigma.supertile(a, 3), sigma.supertile(b, 3))
        ok &= patch_equal(lhs, sigma.supertile(a + b, 3))
        c = rng.randrange(1, m)
        ok &= patch_equal(patch_scale(c, sigma.supertile(a, 3)),
                          sigma.supertile(a.scale(c), 3))
    return {"patch-additivity": ok}


def _suite_automata(m: int) -> dict[str, bool]:
    anchor = TriTile(UP, (0, 2, 1), m)
    ok = True
    for k in range(4):
        patch = tilings.s_patch(anchor, k)
        for idx in range(4 ** k):
            w = sigma.index_to_word(idx, k, "plane")
            state = automata.run("M", w, m)
            got = automata.decode_M(state, anchor)
            i, j, cell = sigma.word_to_cell(w)
            if got != lattice.tile_at(patch, i, j, cell):
                ok = False
    report = {"machine-M": ok}
    ok = True
    for n in range(2 ** 10):
        state = automata.run("O", automata.pad_o_bits(n), m)
        got = automata.decode_O(state, SegTile((0, 1), m))
        if got.endpoints != (tau.fusc(n, m), tau.fusc(n + 1, m)):
            ok = False
    report["machine-O"] = ok
    return report


_SUITES = {
    "matrices": _suite_matrices,
    "additivity": _suite_additivity,
    "automata": _suite_automata,
    "zeros": lambda m: analysis.check_zero_lemmas(m, 3),
    "nonperiodicity": analysis.nonperiodicity_witnesses,
    "reachability": lambda m: {
        "total": analysis.reachability(m).is_total(),
    },
    "symmetry": lambda m: {
        "balanced-seed": {"mirror", "rot3"} <= analysis.detect_symmetries(
            sigma.supertile(TriTile(UP, (1, 1, 1), m), 3)
        ),
        "hex": {"mirror", "rot6"} <= analysis.detect_symmetries(
            tilings.h_patch(2, 1, 1, m)
        ),
    },
}


def _cmd_verify(args) -> int:
    names = list(_SUITES) if args.check == "all" else [args.check]
    if any(name not in _SUITES for name in names):
        raise SternTilesError(f"unknown check suite {args.check!r}")
    report = {name: _SUITES[name](args.modulus) for name in names}
    _emit(json.dumps(report, indent=2) + "\n", args.out)
    return 0 if all(all(sub.values()) for sub in report.values()) else 1


def _cmd_render(args) -> int:
    if args.infile:
        with open(args.infile, "r", encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    patch = lattice.from_json(text)
    _emit(render.render(patch, args.format, mode=args.mode), args.out)
    return 0


def _cmd_fusc(args) -> int:
    _emit(str(tau.fusc(args.n, args.modulus)) + "\n", args.out)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="sterntiles")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, modulus=True):
        if modulus:
            p.add_argument("--modulus", type=int, default=3)
        p.add_argument("--out", default=None)

    p = sub.add_parser("gen", help="grow a patch from a seed")
    common(p)
    p.add_argument("--rule", default="sigma",
                   choices=["sigma"] + [f"sigma{i}" for i in range(1, 8)] + ["tau"])
    p.add_argument("--seed", required=True,
                   help="up:x,y,z | down:x,y,z | seg:x,y | hex:b,c | sq:w,x,y,z")
    p.add_argument("--steps", type=int, default=1)
    p.add_argument("--family", default="supertile",
                   choices=["supertile", "s", "h", "v", "w"])
    p.add_argument("--format", default="json",
                   choices=["json", "ppm", "svg", "csv"])
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("query", help="random access through an automaton")
    common(p)
    p.add_argument("--machine", required=True, choices=["M", "N", "O"])
    p.add_argument("--seed", required=True)
    p.add_argument("--position", type=int, required=True)
    p.add_argument("--steps", type=int, default=1,
                   help="nesting depth the position is addressed in")
    p.add_argument("--sector", type=int, default=0)
    p.add_argument("--convention", default="plane",
                   choices=["plane", "sector", "binary"])
    p.set_defaults(func=_cmd_query)

    p = sub.add_parser("verify", help="run named check suites")
    common(p)
    p.add_argument("--check", default="all",
                   choices=["all"] + sorted(_SUITES))
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("render", help="rasterize a JSON patch dump")
    common(p, modulus=False)
    p.add_argument("--in", dest="infile", default=None)
    p.add_argument("--format", default="ppm", choices=["ppm", "svg"])
    p.add_argument("--mode", default="points", choices=["points", "fill"])
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("fusc", help="evaluate the diatomic sequence")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--modulus", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_fusc)
    return top


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SternTilesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
