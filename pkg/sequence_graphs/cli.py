"""
Command line front end.

Every subcommand writes one deterministic JSON document (or an SVG) to
``--out`` or stdout. Package errors are reported as a single JSON line on
stderr and mapped to the exit code carried by the error class.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import TYPE_CHECKING, Any

from gmpy2 import mpfr

from sequence_graphs import __version__
from sequence_graphs.console_logger import ConsoleLogger, MessageLevel
from sequence_graphs.embedding import (
    canonical_rotation,
    chamanara_embed,
    chamanara_svg,
    covering_scale,
    face_trace,
    scale_for,
    sequence_graph_svg,
    torus_embedding,
    verify_embedding,
)
from sequence_graphs.errors import (
    EmbeddingVerificationFailed,
    InadmissibleSize,
    InvalidParam,
    InvalidSpecFile,
    SequenceGraphError,
)
from sequence_graphs.families import SequenceFamily, SequenceSpec
from sequence_graphs.file_utils import dumps_json, write_text
from sequence_graphs.gap_analysis import (
    circulant_check,
    gap_count,
    gap_profile,
    growth_ratios,
    is_nice_N,
    next_nice_N,
    nice_N_scan,
    three_gap_sweep,
    value_gaps,
    verify_three_gap,
)
from sequence_graphs.graphs import (
    build_graph,
    degree_report,
    g_prime,
    is_same_labeled_graph,
    last_c1_edge,
    minor_reduction,
)
from sequence_graphs.iet import (
    IETConvention,
    iet_orbit,
    iet_preset,
    load_iet_spec,
    orbit_sequence,
)
from sequence_graphs.precision_utils import DEFAULT_PRECISION_BITS
from sequence_graphs.sequences import KroneckerParams
from sequence_graphs.toml_utils import load_toml, require_table

if TYPE_CHECKING:
    from collections.abc import Callable, Sequence

    from sequence_graphs.iet import IETSpec

module_logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ("json", "svg")


@dataclass(frozen=True)
class RunConfig:
    """A validated command line invocation."""

    command: str
    sequence: SequenceSpec
    n: int | None = None
    output_format: str = "json"
    out: Path | None = None
    drop_last_edge: bool = False
    big_m: int | None = None
    thetas: tuple[str, ...] = ("golden",)
    n_max: int = 1000
    workers: int = 1
    extra: dict[str, Any] = field(default_factory=dict)

    def require_n(self) -> int:
        if self.n is None or self.n < 1:
            msg = f"--n must be a positive integer, got {self.n}."
            raise InvalidParam(msg)
        return self.n


def _iet_from_args(args: argparse.Namespace) -> IETSpec | None:
    if args.iet_spec and args.preset:
        msg = "Give either --iet-spec or --preset, not both."
        raise InvalidParam(msg)
    precision = args.precision or DEFAULT_PRECISION_BITS
    if args.iet_spec:
        T = load_iet_spec(args.iet_spec, precision_bits=args.precision)
    elif args.preset:
        T = iet_preset(args.preset, precision_bits=precision)
    else:
        return None
    if args.convention:
        T = T.with_convention(IETConvention(args.convention))
    return T


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """Validate parsed arguments into a `RunConfig`.

    Raises
    ------
    InvalidParam
        If the arguments are inconsistent.
    """
    if args.command == "scan":
        return RunConfig(
            "scan",
            SequenceSpec(SequenceFamily.KRONECKER),
            out=Path(args.out) if args.out else None,
            thetas=tuple(args.theta or ("golden",)),
            n_max=args.n_max,
            workers=max(args.workers, 1),
        )

    iet = _iet_from_args(args)
    family = SequenceFamily.from_label("iet" if args.command == "iet" else args.family)
    if family is SequenceFamily.IET and iet is None:
        msg = "The iet family needs --iet-spec or --preset."
        raise InvalidParam(msg)
    if family is not SequenceFamily.IET and iet is not None:
        msg = f"--iet-spec and --preset select the iet family, not {family.label}."
        raise InvalidParam(msg)

    sequence = SequenceSpec(
        family,
        theta=args.theta,
        base=args.base,
        precision_bits=args.precision or DEFAULT_PRECISION_BITS,
        iet=iet,
    )
    if args.format not in OUTPUT_FORMATS:
        msg = f"Unknown output format {args.format!r}."
        raise InvalidParam(msg)
    return RunConfig(
        args.command,
        sequence,
        n=args.n,
        output_format=args.format,
        out=Path(args.out) if args.out else None,
        drop_last_edge=args.drop_last_edge,
        big_m=getattr(args, "big_m", None),
    )


def cmd_generate(cfg: RunConfig) -> str:
    """The sequence graph as JSON, or drawn on a circle as SVG."""
    seq = cfg.sequence.prefix(cfg.require_n())
    graph = build_graph(seq)
    if cfg.output_format == "svg":
        return sequence_graph_svg(graph)
    return dumps_json({"sequence": cfg.sequence.describe(), **graph.to_json()})


def cmd_analyze(cfg: RunConfig) -> str:
    """Gap profile, nice-N flag and circulant connection set."""
    seq = cfg.sequence.prefix(cfg.require_n())
    profile = gap_profile(seq)
    connection_set = circulant_check(build_graph(seq), seq)
    payload = {
        "sequence": cfg.sequence.describe(),
        **profile.to_json(),
        "gap_count": gap_count(seq),
        "three_gap": verify_three_gap(seq),
        "nice": is_nice_N(seq),
        "circulant": list(connection_set.connections) if connection_set else None,
        "circulant_report": connection_set.to_json() if connection_set else None,
        "value_gaps": len(value_gaps(seq)),
    }
    return dumps_json(payload)


def _check_minor(spec: SequenceSpec, M: int, n: int) -> dict[str, Any]:
    reduction = minor_reduction(build_graph(spec.prefix(M)), n)
    matches = is_same_labeled_graph(reduction.graph, g_prime(spec.prefix(n)))
    return {**reduction.to_json(), "matches_g_prime": matches}


def _embed_vdc(cfg: RunConfig, n: int) -> tuple[dict[str, Any], str | None]:
    try:
        m = scale_for(n)
        minor = None
    except InadmissibleSize:
        if not cfg.drop_last_edge:
            raise
        m = covering_scale(n)
        minor = _check_minor(cfg.sequence, 4**m, n)

    embedding = chamanara_embed(m)
    certificate = verify_embedding(embedding)
    if not certificate.verified or (minor and not minor["matches_g_prime"]):
        msg = f"The Chamanara embedding at m={m} failed verification."
        raise EmbeddingVerificationFailed(msg)

    payload = {
        "surface": "chamanara",
        "n": n,
        "M": embedding.N,
        "verified": True,
        "certificate": certificate.to_json(),
        "embedding": embedding.to_json(),
        "minor": minor,
    }
    return payload, chamanara_svg(embedding)


def _embed_kronecker(cfg: RunConfig, n: int) -> tuple[dict[str, Any], str | None]:
    seq = cfg.sequence.prefix(n)
    M, minor = n, None
    if n < 2 or not is_nice_N(seq):  # noqa: PLR2004
        if not cfg.drop_last_edge:
            msg = f"N = {n} is not nice for theta = {cfg.sequence.theta}."
            raise InadmissibleSize(msg)
        params = KroneckerParams.from_text(cfg.sequence.theta, cfg.sequence.precision_bits)
        M = next_nice_N(params, n)
        minor = _check_minor(cfg.sequence, M, n)
        seq = cfg.sequence.prefix(M)

    connection_set = circulant_check(build_graph(seq), seq)
    if connection_set is None:
        msg = f"G_{M} is nice but not circulant."
        raise EmbeddingVerificationFailed(msg)
    torus = torus_embedding(M, connection_set.c)
    if torus.faces.genus != 1 or (minor and not minor["matches_g_prime"]):
        msg = f"The torus embedding of G_{M} failed verification."
        raise EmbeddingVerificationFailed(msg)

    payload = {
        "surface": "torus",
        "n": n,
        "M": M,
        "verified": True,
        "circulant": list(connection_set.connections),
        "genus": torus.faces.genus,
        "torus": torus.to_json(),
        "minor": minor,
    }
    return payload, sequence_graph_svg(build_graph(seq))


def cmd_embed(cfg: RunConfig) -> str:
    """Verified torus or Chamanara embedding, as JSON or SVG."""
    n = cfg.require_n()
    match cfg.sequence.family:
        case SequenceFamily.VDC:
            if cfg.sequence.base != 2:  # noqa: PLR2004
                msg = "Only the binary van der Corput graph has a square embedding."
                raise InvalidParam(msg)
            payload, svg = _embed_vdc(cfg, n)
        case SequenceFamily.KRONECKER:
            payload, svg = _embed_kronecker(cfg, n)
        case _:
            msg = "embed supports the kronecker and vdc families; see the iet command."
            raise InvalidParam(msg)
    if cfg.output_format == "svg":
        return svg
    return dumps_json(payload)


def cmd_minor(cfg: RunConfig) -> str:
    """Reduction trace of ``G_M`` to ``G'_N`` and its comparison with ``G'_N``."""
    if cfg.big_m is None:
        msg = "minor needs --m."
        raise InvalidParam(msg)
    n = cfg.require_n()
    payload = {
        "sequence": cfg.sequence.describe(),
        **_check_minor(cfg.sequence, cfg.big_m, n),
    }
    return dumps_json(payload)


def cmd_iet(cfg: RunConfig) -> str:
    """Orbit, sequence graph and exploratory genus of an IET."""
    n = cfg.require_n()
    T = cfg.sequence.iet
    report = iet_orbit(T, mpfr(0), n)
    seq = orbit_sequence(report, T.precision_bits)
    graph = build_graph(seq).to_multigraph()
    if cfg.drop_last_edge:
        graph.remove_edge(last_c1_edge(n))

    faces = face_trace(canonical_rotation(graph)) if n >= 3 else None  # noqa: PLR2004
    count = gap_count(seq) if n >= 2 else None  # noqa: PLR2004
    payload = {
        "iet": T.describe(),
        "n": n,
        "distinct": report.distinct_ok,
        "edges": graph.number_of_edges(),
        "dropped_last_edge": cfg.drop_last_edge,
        "degrees": degree_report(graph).to_json(),
        "gap_count": count,
        "gap_bound": T.k + 2,
        "faces": faces.to_json() if faces else None,
        "genus": faces.genus if faces else None,
    }
    return dumps_json(payload)


def _scan_one(theta: str, n_max: int) -> dict[str, Any]:
    nice = nice_N_scan(theta, n_max)
    return {
        "theta": theta,
        "n_max": n_max,
        "nice": nice,
        "ratios": [round(r, 6) for r in growth_ratios(nice)],
        "three_gap_failures": three_gap_sweep(theta, n_max),
    }


def cmd_scan(cfg: RunConfig) -> str:
    """Nice N for several rotation numbers, one worker process per number."""
    n_max = [cfg.n_max] * len(cfg.thetas)
    if cfg.workers == 1:
        scans = list(map(_scan_one, cfg.thetas, n_max))
    else:
        with ProcessPoolExecutor(max_workers=cfg.workers) as executor:
            scans = list(executor.map(_scan_one, cfg.thetas, n_max))
    return dumps_json({"scans": scans})


COMMANDS: dict[str, Callable[[RunConfig], str]] = {
    "generate": cmd_generate,
    "analyze": cmd_analyze,
    "embed": cmd_embed,
    "minor": cmd_minor,
    "iet": cmd_iet,
    "scan": cmd_scan,
}


def _io_parent() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--format", default="json", choices=OUTPUT_FORMATS)
    parent.add_argument("--out", help="Output file; stdout when omitted.")
    parent.add_argument("--config", help="TOML file whose [run] table sets defaults.")
    parent.add_argument("-v", "--verbose", action="count", default=0)
    parent.add_argument("--log-file", help="Write the full debug log to this file.")
    return parent


def _sequence_parent() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--family", default="kronecker", choices=("kronecker", "vdc", "iet"))
    parent.add_argument("--theta", default="golden", help="Named constant or decimal.")
    parent.add_argument("--base", type=int, default=2)
    parent.add_argument("--n", type=int, help="Number of terms N.")
    parent.add_argument("--precision", type=int, help="Working precision in bits.")
    parent.add_argument("--iet-spec", help="IET spec file (TOML).")
    parent.add_argument("--preset", help="Named example IET.")
    parent.add_argument("--convention", choices=[c.value for c in IETConvention])
    parent.add_argument("--drop-last-edge", action="store_true")
    return parent


def build_parser() -> tuple[argparse.ArgumentParser, dict[str, argparse.ArgumentParser]]:
    parser = argparse.ArgumentParser(
        prog="sequence-graphs",
        description="Sequence graphs of Kronecker, van der Corput and IET sequences.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    subparsers = parser.add_subparsers(dest="command", required=True)

    io_parent, sequence_parent = _io_parent(), _sequence_parent()
    children = {}
    for name in ("generate", "analyze", "embed", "minor", "iet"):
        child = subparsers.add_parser(
            name,
            parents=[sequence_parent, io_parent],
            help=(COMMANDS[name].__doc__ or "").splitlines()[0],
        )
        if name == "minor":
            child.add_argument("--m", dest="big_m", type=int, help="Size M of G_M.")
        children[name] = child

    scan = subparsers.add_parser("scan", parents=[io_parent], help=cmd_scan.__doc__)
    scan.add_argument("--theta", action="append", help="Repeat for several numbers.")
    scan.add_argument("--n-max", type=int, default=1000)
    scan.add_argument("--workers", type=int, default=1)
    children["scan"] = scan
    return parser, children


def _apply_config_file(
    argv: Sequence[str],
    children: dict[str, argparse.ArgumentParser],
) -> None:
    """Make the ``[run]`` table of ``--config`` the defaults of the chosen
    subcommand, so explicit flags still win."""
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(argv)
    command = next((arg for arg in argv if arg in children), None)
    if not known.config or command is None:
        return

    table = require_table(load_toml(known.config), "run", source=known.config)
    child = children[command]
    dests = {}
    for action in child._actions:  # noqa: SLF001
        dests[action.dest] = action.dest
        for option in action.option_strings:
            dests[option.lstrip("-").replace("-", "_")] = action.dest
    keys = {key: key.replace("-", "_") for key in table}
    unknown = {key for key, name in keys.items() if name not in dests}
    if unknown:
        msg = f"Unknown [run] keys in {known.config}: {', '.join(sorted(unknown))}."
        raise InvalidSpecFile(msg)
    defaults = {dests[keys[key]]: value for key, value in table.items()}
    child.set_defaults(**defaults)
    module_logger.debug("Defaults from %s: %s", known.config, sorted(defaults))


def _report_error(error: BaseException, exit_code: int) -> int:
    payload = {
        "error": type(error).__name__,
        "message": str(error),
        "exit_code": exit_code,
    }
    sys.stderr.write(json.dumps(payload, sort_keys=True) + "\n")
    return exit_code


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser, children = build_parser()
    try:
        _apply_config_file(argv, children)
        args = parser.parse_args(argv)
        level = MessageLevel.from_verbosity(args.verbose)
        console = ConsoleLogger(
            args.log_file,
            print_level=level,
            log_level=MessageLevel.DEBUG if args.log_file else level,
        )
        cfg = config_from_args(args)
        text = COMMANDS[cfg.command](cfg)
        written = write_text(text, cfg.out)
    except SequenceGraphError as e:
        module_logger.debug("Command failed", exc_info=e)
        return _report_error(e, e.exit_code)
    except FileNotFoundError as e:
        return _report_error(e, InvalidParam.exit_code)

    if written is not None:
        console.info(f"Wrote {written}")
    return 0
