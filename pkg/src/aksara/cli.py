"""Command-line interface: tokenize, shingle, compare, matrix, mst, ingest, serve.

Every command is a thin composition of library calls; no analysis logic
lives here. Exit codes: 0 success, 1 usage error, 2 data error. All
output is UTF-8 and deterministic for identical inputs and flags.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from aksara import aligner, corpus, graph, shingler, similarity
from aksara.normalizer import RULE_ORDER, NormalizationProfile
from aksara.scanner import tokenize_aksaras
from aksara.shingler import ShingleParamError, ShingleParams

USAGE_ERROR = 1
DATA_ERROR = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _profile_from_args(
    args: argparse.Namespace, index: corpus.CorpusIndex | None = None
) -> NormalizationProfile:
    if getattr(args, "no_normalize", False):
        return NormalizationProfile.none()
    raw = getattr(args, "normalize", None)
    if raw is None:
        # flags beat the manifest's "normalize" list, which beats the default
        if index is not None:
            return index.default_profile
        return NormalizationProfile.default()
    rules = [r.strip() for r in raw.split(",") if r.strip()]
    try:
        return NormalizationProfile.of(*rules)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _params_from_args(args: argparse.Namespace) -> ShingleParams:
    try:
        return ShingleParams(
            n=args.n,
            mode=getattr(args, "mode", shingler.CONTIGUOUS),
            k=getattr(args, "k", 0),
            unit=getattr(args, "unit", shingler.UNIT_AKSARA),
        )
    except ShingleParamError as exc:
        raise UsageError(str(exc)) from exc


def _read_text(args: argparse.Namespace) -> str:
    if getattr(args, "file", None):
        try:
            return Path(args.file).read_text(encoding="utf-8")
        except OSError as exc:
            raise corpus.CorpusError(f"cannot read {args.file}: {exc}") from exc
    if getattr(args, "text", None) is not None:
        return args.text
    raise UsageError("provide TEXT or --file PATH")


def _manifest_path(args: argparse.Namespace) -> str:
    manifest = getattr(args, "manifest", None) or os.environ.get("AKSARA_CORPUS")
    if not manifest:
        raise UsageError("provide --manifest PATH (or set AKSARA_CORPUS)")
    return manifest


def _add_params_flags(parser: argparse.ArgumentParser, default_n: int = 4) -> None:
    parser.add_argument("--n", type=int, default=default_n, help="gram size")
    parser.add_argument(
        "--mode", choices=shingler.MODES, default=shingler.CONTIGUOUS, help="windowing mode"
    )
    parser.add_argument("--k", type=int, default=0, help="max skipped akṣaras (skip mode)")
    parser.add_argument(
        "--unit", choices=shingler.UNITS, default=shingler.UNIT_AKSARA, help="token unit"
    )


def _add_profile_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--normalize",
        metavar="RULES",
        help="comma-separated normalization rules (default: all but merge-b-v); "
        f"known: {', '.join(RULE_ORDER)}",
    )
    parser.add_argument(
        "--no-normalize", action="store_true", help="disable all normalization"
    )


def build_parser() -> _Parser:
    parser = _Parser(prog="aksara", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tokenize", help="emit one akṣara per line with its byte span")
    p.add_argument("text", nargs="?", help="IAST text")
    p.add_argument("--file", help="read text from a file")

    p = sub.add_parser("shingle", help="emit sorted shingle keys, one per line")
    p.add_argument("text", nargs="?", help="IAST text")
    p.add_argument("--file", help="read text from a file")
    _add_params_flags(p)
    _add_profile_flags(p)

    p = sub.add_parser("compare", help="pairwise comparison report for two documents")
    p.add_argument("--manifest", help="corpus manifest (default: $AKSARA_CORPUS)")
    p.add_argument("--a", required=True, dest="doc_a", help="first document id")
    p.add_argument("--b", required=True, dest="doc_b", help="second document id")
    _add_params_flags(p)
    _add_profile_flags(p)
    p.add_argument("--format", choices=("text", "json", "html"), default="text")
    p.add_argument("--out", help="write to a file instead of stdout")

    p = sub.add_parser("matrix", help="pairwise similarity matrix as TSV")
    p.add_argument("--manifest", help="corpus manifest (default: $AKSARA_CORPUS)")
    p.add_argument("--metric", choices=similarity.METRICS, default=similarity.DICE)
    p.add_argument("--combine", choices=("mean",), default=None)
    _add_params_flags(p)
    _add_profile_flags(p)

    p = sub.add_parser("mst", help="minimum spanning tree of the corpus")
    p.add_argument("--manifest", help="corpus manifest (default: $AKSARA_CORPUS)")
    p.add_argument("--metric", choices=similarity.METRICS, default=similarity.DICE)
    p.add_argument("--combine", choices=("mean",), default=None)
    _add_params_flags(p)
    _add_profile_flags(p)
    p.add_argument("--out", help="output path; .json or .dot chooses the format")

    p = sub.add_parser("ingest", help="load a corpus and optionally precompute shingles")
    p.add_argument("--manifest", help="corpus manifest (default: $AKSARA_CORPUS)")
    p.add_argument(
        "--precompute",
        metavar="n=2,3,4,5",
        help="precompute and cache shingle sets for these gram sizes",
    )
    p.add_argument("--cache-dir", default="cache", help="cache directory")
    _add_profile_flags(p)

    p = sub.add_parser("serve", help="HTTP API over a loaded corpus")
    p.add_argument("--manifest", help="corpus manifest (default: $AKSARA_CORPUS)")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--static", help="explorer UI directory to serve at / and /assets")

    return parser


def _cmd_tokenize(args: argparse.Namespace, out) -> None:
    stream = tokenize_aksaras(_read_text(args))
    for aksara in stream.aksaras:
        out.write(f"{aksara.surface}\t{aksara.span.start}\t{aksara.span.end}\n")


def _cmd_shingle(args: argparse.Namespace, out) -> None:
    params = _params_from_args(args)
    profile = _profile_from_args(args)
    text = _read_text(args)
    if params.unit == shingler.UNIT_CHARACTER:
        shingle_set = shingler.character_shingles(text, params.n)
    else:
        from aksara.normalizer import normalize

        stream = normalize(tokenize_aksaras(text), profile)
        shingle_set = shingler.shingles(stream, params)
    for key in sorted(shingle_set.keys):
        out.write(key + "\n")


def _cmd_compare(args: argparse.Namespace, out) -> None:
    index = corpus.ingest(_manifest_path(args))
    params = _params_from_args(args)
    profile = _profile_from_args(args, index)
    report = aligner.compare(index, args.doc_a, args.doc_b, params, profile)
    if args.format == "json":
        text = json.dumps(aligner.report_to_dict(report), ensure_ascii=False, indent=2) + "\n"
    elif args.format == "html":
        text = aligner.render_html(
            report,
            index.text(args.doc_a),
            index.text(args.doc_b),
            index.record(args.doc_a).title,
            index.record(args.doc_b).title,
        )
    else:
        lines = [
            f"documents: {report.doc_a} vs {report.doc_b}",
            f"params: n={params.n} mode={params.mode} k={params.k} unit={params.unit}",
            f"profile: {profile.cache_token()}",
            f"jaccard: {report.jaccard:.6f}",
            f"dice: {report.dice:.6f}",
            "shared keys by n: "
            + "  ".join(f"{n}:{report.counts_by_n[n]}" for n in sorted(report.counts_by_n)),
            "matches:",
        ]
        for m in report.matches:
            lines.append(
                f"  {m.key}\tA[{m.span_a.start},{m.span_a.end})\tB[{m.span_b.start},{m.span_b.end})"
            )
        text = "\n".join(lines) + "\n"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        out.write(text)


def _cmd_matrix(args: argparse.Namespace, out) -> None:
    index = corpus.ingest(_manifest_path(args))
    matrix = similarity.similarity_matrix(
        index,
        _params_from_args(args),
        _profile_from_args(args, index),
        metric=args.metric,
        combine=args.combine,
    )
    out.write(matrix.to_tsv())
    if matrix.empty_documents:
        sys.stderr.write(
            "warning: empty shingle sets for: " + ", ".join(matrix.empty_documents) + "\n"
        )


def _cmd_mst(args: argparse.Namespace, out) -> None:
    index = corpus.ingest(_manifest_path(args))
    matrix = similarity.similarity_matrix(
        index,
        _params_from_args(args),
        _profile_from_args(args, index),
        metric=args.metric,
        combine=args.combine,
    )
    tree = graph.minimum_spanning_tree(matrix, index.records)
    if args.out:
        fmt = graph.DOT_FORMAT if args.out.endswith(".dot") else graph.JSON_FORMAT
        Path(args.out).write_text(graph.export_graph(tree, fmt), encoding="utf-8")
    else:
        out.write(graph.export_graph(tree, graph.JSON_FORMAT))


def _cmd_ingest(args: argparse.Namespace, out) -> None:
    index = corpus.ingest(_manifest_path(args))
    profile = _profile_from_args(args, index)
    out.write(f"ingested {len(index.records)} documents\n")
    for warning in index.warnings:
        sys.stderr.write("warning: " + warning + "\n")
    if args.precompute:
        spec_text = args.precompute
        if spec_text.startswith("n="):
            spec_text = spec_text[2:]
        try:
            ns = [int(x) for x in spec_text.split(",") if x.strip()]
        except ValueError as exc:
            raise UsageError(f"bad --precompute value: {args.precompute!r}") from exc
        params_list = [ShingleParams(n=n) for n in ns]
        written = index.precompute(args.cache_dir, params_list, profile)
        out.write(f"wrote {len(written)} cache files under {args.cache_dir}\n")


def _cmd_serve(args: argparse.Namespace, out) -> None:
    import uvicorn

    from aksara.server import create_app

    index = corpus.ingest(_manifest_path(args))
    app = create_app(index, static_dir=args.static)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")


_COMMANDS = {
    "tokenize": _cmd_tokenize,
    "shingle": _cmd_shingle,
    "compare": _cmd_compare,
    "matrix": _cmd_matrix,
    "mst": _cmd_mst,
    "ingest": _cmd_ingest,
    "serve": _cmd_serve,
}


def run(argv: list[str] | None = None, out=None) -> int:
    """Parse argv and run one command; returns the exit status."""
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _COMMANDS[args.command](args, out)
        return 0
    except (UsageError, ShingleParamError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return USAGE_ERROR
    except corpus.CorpusError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return DATA_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
