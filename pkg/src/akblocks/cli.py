"""Command-line front end.

Multipartitions are written with components separated by ``|`` and parts by
commas, e.g. ``"3,2|"`` or ``"1|1,1|2"``; an empty component may be written
as nothing, ``0`` or ``-``.  Multicharges are comma-separated integers.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .beta_core import BetaSet, Partition, e_quotient
from .blocks import (
    BlockDescriptor,
    GuardExceeded,
    block_from_label,
    block_of,
    enumerate_block,
    scopes_status,
    si_dot_block,
    wk_pair,
)
from .multipartition import ChargedMultipartition, multi_hub
from .uglov import pair_core, pair_weight, uglov_inverse, uglov_map, uglov_partition
from .weyl import canonicalize, classify_charge, dot_si_multipartition


class ParseError(ValueError):
    pass


def _parse_int(tok: str, what: str) -> int:
    try:
        return int(tok.strip())
    except ValueError:
        raise ParseError(f"malformed integer {tok!r} in {what}") from None


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("", "0", "-"):
        return Partition()
    parts = [_parse_int(tok, "partition") for tok in text.split(",")]
    if any(p <= 0 for p in parts):
        raise ParseError(f"parts must be positive: {text!r}")
    if any(parts[a] < parts[a + 1] for a in range(len(parts) - 1)):
        raise ParseError(f"parts are not weakly decreasing: {text!r}")
    return Partition(parts)


def parse_multipartition(text: str) -> tuple[Partition, ...]:
    return tuple(parse_partition(c) for c in text.split("|"))


def parse_multicharge(text: str) -> tuple[int, ...]:
    if not text.strip():
        raise ParseError("empty multicharge")
    return tuple(_parse_int(tok, "multicharge") for tok in text.split(","))


def render_partition(lam: Sequence[int]) -> str:
    return ",".join(map(str, lam)) if lam else "-"


def render_multipartition(comps: Sequence[Sequence[int]]) -> str:
    return "|".join(render_partition(c) for c in comps)


def render_multicharge(t: Sequence[int]) -> str:
    return ",".join(map(str, t))


def descriptor_record(desc: BlockDescriptor) -> dict:
    return {
        "e": desc.e,
        "l": desc.l,
        "multicharge": render_multicharge(desc.multicharge),
        "core": render_partition(desc.core),
        "weight": desc.weight,
        "hub": list(desc.hub),
        "content": list(desc.content),
        "n": desc.n,
    }


def _pair(args) -> ChargedMultipartition:
    comps = parse_multipartition(args.mp)
    charge = parse_multicharge(args.charge)
    if len(comps) != len(charge):
        raise ParseError(f"{len(comps)} components but {len(charge)} charges")
    return ChargedMultipartition(comps, charge)


def _beta_record(B: BetaSet) -> dict:
    return {"partition": render_partition(B.shape), "charge": B.charge}


def cmd_core(args) -> dict:
    lam = _pair(args)
    return {"core": render_partition(pair_core(lam, args.e)),
            "charge": sum(lam.charge)}


def cmd_weight(args) -> dict:
    lam = _pair(args)
    return {"weight": pair_weight(lam, args.e), "block_weight": block_of(lam, args.e).weight}


def cmd_uglov(args) -> dict:
    if args.inverse:
        if args.l is None:
            raise ParseError("--inverse needs --l")
        charge = parse_multicharge(args.charge)
        if len(charge) != 1:
            raise ParseError("--inverse takes a single charge")
        bs = uglov_inverse(BetaSet(charge[0], parse_partition(args.mp)), args.e, args.l)
        return {"mp": render_multipartition([b.shape for b in bs]),
                "charge": render_multicharge([b.charge for b in bs])}
    img = uglov_partition(_pair(args), args.e)
    return {"partition": render_partition(img.partition), "charge": img.charge}


def cmd_quotient(args) -> dict:
    lam = _pair(args)
    q = e_quotient(uglov_map(lam.beta_sets(), args.e), args.e)
    return {"components": [_beta_record(c) for c in q.components]}


def cmd_hub(args) -> dict:
    return {"hub": list(multi_hub(_pair(args), args.e))}


def cmd_block(args) -> dict:
    return descriptor_record(block_of(_pair(args), args.e))


def _descriptor(args) -> BlockDescriptor:
    if args.mp is not None:
        return block_of(_pair(args), args.e)
    if args.n is None or args.core is None or args.weight is None:
        raise ParseError("give either --mp or all of --n, --core, --weight")
    r = parse_multicharge(args.charge)
    desc = block_from_label(args.e, r, args.n, parse_partition(args.core), args.weight,
                            guard=args.guard)
    if desc is None:
        return BlockDescriptor(args.e, len(r), r, parse_partition(args.core), args.weight,
                               (), (), args.n)
    return desc


def cmd_enumerate(args) -> dict:
    desc = _descriptor(args)
    members = enumerate_block(desc, guard=args.guard)
    rec = descriptor_record(desc)
    rec["members"] = [render_multipartition(m.components) for m in members]
    return rec


def cmd_dot(args) -> dict:
    lam = _pair(args)
    mu = dot_si_multipartition(lam, args.e, args.i)
    return {"mp": render_multipartition(mu.components), "charge": render_multicharge(mu.charge)}


def cmd_wkpair(args) -> dict:
    desc = block_of(_pair(args), args.e)
    pair = wk_pair(desc, args.i)
    other = si_dot_block(desc, args.i)
    return {
        "pair": None if pair is None else {"w": pair[0], "k": pair[1]},
        "block": descriptor_record(desc),
        "image": descriptor_record(other),
    }


def cmd_scopes(args) -> dict:
    desc = block_of(_pair(args), args.e)
    st = scopes_status(desc, args.i, guard=args.guard)
    return {"theorem_sufficient": st.theorem_sufficient, "direct": st.direct,
            "block": descriptor_record(desc)}


def cmd_canonicalize(args) -> dict:
    t = parse_multicharge(args.charge)
    std, w = canonicalize(t, args.e)
    return {
        "charge": render_multicharge(std),
        "sigma": list(w.sigma),
        "u": list(w.u),
        "domain": classify_charge(t, args.e).value,
    }


COMMANDS = {
    "core": (cmd_core, "e-core of the Uglov image"),
    "weight": (cmd_weight, "e-weight of the Uglov image and of the block"),
    "uglov": (cmd_uglov, "Uglov image (or its inverse with --inverse)"),
    "quotient": (cmd_quotient, "e-quotient of the Uglov image"),
    "hub": (cmd_hub, "e-hub of a charged multipartition"),
    "block": (cmd_block, "block descriptor"),
    "enumerate": (cmd_enumerate, "members of a block"),
    "dot": (cmd_dot, "s_i dot action on a charged multipartition"),
    "wkpair": (cmd_wkpair, "[w:k]-pair formed with s_i . B"),
    "scopes": (cmd_scopes, "Scopes equivalence of B and s_i . B"),
    "canonicalize": (cmd_canonicalize, "reduce a multicharge into the fundamental alcove"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="akblocks", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_) in COMMANDS.items():
        p = sub.add_parser(name, help=help_)
        p.add_argument("--e", type=int, required=True)
        p.add_argument("--format", choices=("text", "json"), default="text")
        if name != "canonicalize":
            p.add_argument("--mp", required=name != "enumerate")
        p.add_argument("--charge", required=True)
        if name in ("dot", "wkpair", "scopes"):
            p.add_argument("--i", type=int, required=True)
        if name in ("enumerate", "scopes"):
            p.add_argument("--guard", type=int)
        if name == "enumerate":
            p.add_argument("--n", type=int)
            p.add_argument("--core")
            p.add_argument("--weight", type=int)
        if name == "uglov":
            p.add_argument("--inverse", action="store_true")
            p.add_argument("--l", type=int)
    return parser


def _text(rec, indent: str = "") -> list[str]:
    lines = []
    for key, val in rec.items():
        if isinstance(val, dict):
            lines.append(f"{indent}{key}:")
            lines.extend(_text(val, indent + "  "))
        elif isinstance(val, list) and val and isinstance(val[0], (dict, str)):
            lines.append(f"{indent}{key}:")
            for item in val:
                if isinstance(item, dict):
                    lines.append(f"{indent}  - " + " ".join(f"{k}={v}" for k, v in item.items()))
                else:
                    lines.append(f"{indent}  {item}")
        elif isinstance(val, list):
            lines.append(f"{indent}{key}: {','.join(map(str, val))}")
        else:
            lines.append(f"{indent}{key}: {'-' if val is None else val}")
    return lines


_VALUE_FLAGS = ("--charge", "--mp", "--core")


def _attach_values(argv: Sequence[str]) -> list[str]:
    """Glue ``--charge -1,2`` into ``--charge=-1,2`` so argparse does not read
    a leading minus sign as an option."""
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else argv
    try:
        args = parser.parse_args(_attach_values(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.e < 2:
        print(f"error: e must be at least 2, got {args.e}", file=err)
        return 2
    func = COMMANDS[args.command][0]
    try:
        rec = func(args)
    except GuardExceeded as exc:
        print(f"error: {exc}", file=err)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=err)
        return 2
    if args.format == "json":
        out.write(json.dumps(rec) + "\n")
    else:
        out.write("\n".join(_text(rec)) + "\n")
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
