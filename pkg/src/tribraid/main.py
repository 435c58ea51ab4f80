import argparse
import logging
import sys
from pathlib import Path
from typing import Any

from tribraid.arbiter.metrics import run_benchmark
from tribraid.arbiter.verifier import BraidVerifier, TableComparator
from tribraid.braids.garside import (
    classify_family,
    conjugate_to_lambda,
    inf_sup,
    normal_form,
    render_factorization,
    render_normal_form,
)
from tribraid.braids.word import parse_word, render_word
from tribraid.core.config import Settings, get_settings
from tribraid.core.errors import PreconditionError, TribraidError
from tribraid.core.types import LinkDiagram, RunReport, Verdict, VerdictStatus
from tribraid.core.utils import safe_read_file, safe_write_file, save_report, setup_logger, timer
from tribraid.diagrams.builder import from_braid_closure, from_rational_code
from tribraid.diagrams.diagram import component_count, is_a_adequate, parse_pd_text, to_pd_text
from tribraid.diagrams.rational import (
    alternating_code,
    is_alternating,
    measure_bookkeeping,
    parse_code,
    t_transform,
    u_transform,
)
from tribraid.homology.oracle import KhovanovOracle
from tribraid.tables.obstruction import matches_positive3
from tribraid.tables.render import render_table, table_record
from tribraid.tables.shapes import ShapeSynthesizer, extended_shape

logger = logging.getLogger("tribraid")

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_ERROR = 2


class TribraidEngine:
    """
    Runs one CLI command. Every command returns a RunReport and its ASCII text.
    """

    def __init__(
        self,
        settings: Settings | None = None,
        max_crossings: int | None = None,
        workers: int | None = None,
    ) -> None:
        self.settings = settings or get_settings()
        self.oracle = KhovanovOracle(self.settings, max_crossings=max_crossings, workers=workers)
        self.synthesizer = ShapeSynthesizer()

    # --- Braids ---

    def nf(self, word: str) -> tuple[RunReport, str]:
        with timer(logger, "normal form") as t:
            nf = normal_form(parse_word(word, 3))
        inf, sup = inf_sup(nf)
        text = render_normal_form(nf)
        report = RunReport(
            command="nf",
            input=word,
            outputs={
                "normal_form": text,
                "factors": render_factorization(nf),
                "inf": inf,
                "sup": sup,
            },
            timings_ms={"normal_form": t["duration_ms"]},
        )
        return report, text + "\n"

    def classify(self, word: str) -> tuple[RunReport, str]:
        nf = normal_form(parse_word(word, 3))
        with timer(logger, "classification") as t:
            lam, conjugator = conjugate_to_lambda(nf)
            tag = classify_family(nf)
        outputs = {
            "family": tag.render(),
            "lambda": lam.family.value,
            "representative": render_normal_form(lam.representative),
            "summit_infimum": lam.representative.p,
            "conjugator": render_word(conjugator),
        }
        report = RunReport(
            command="classify",
            input=word,
            outputs=outputs,
            timings_ms={"classify": t["duration_ms"]},
        )
        return report, "".join(f"{k}: {v}\n" for k, v in outputs.items())

    def summit(self, word: str) -> tuple[RunReport, str]:
        lam, conjugator = conjugate_to_lambda(normal_form(parse_word(word, 3)))
        p = lam.representative.p
        outputs = {
            "summit_infimum": p,
            "representative": render_normal_form(lam.representative),
            "conjugator": render_word(conjugator),
        }
        return RunReport(command="summit", input=word, outputs=outputs), f"{p}\n"

    def shape(self, word: str) -> tuple[RunReport, str]:
        nf = normal_form(parse_word(word, 3))
        with timer(logger, "shape") as t:
            table = extended_shape(nf)
        region = table.region
        if region.complete:
            scope = "determined: complete"
        else:
            scope = (
                f"determined: columns <= {region.i_max} or rows {region.j_low}..{region.j_max}"
            )
        report = RunReport(
            command="shape",
            input=word,
            outputs={"table": table_record(table), "family": classify_family(nf).render()},
            timings_ms={"shape": t["duration_ms"]},
        )
        return report, render_table(table) + scope + "\n"

    # --- Homology ---

    def homology(
        self, diagram: LinkDiagram, source: str, export_pd: str | None = None
    ) -> tuple[RunReport, str]:
        if export_pd:
            safe_write_file(export_pd, to_pd_text(diagram))
            logger.info(f"diagram written to {export_pd}")
        with timer(logger, "homology") as t:
            table = self.oracle.homology(diagram)
        obstruction = matches_positive3(table)
        report = RunReport(
            command="homology",
            input=source,
            outputs={
                "table": table_record(table),
                "crossings": diagram.crossing_count,
                "components": component_count(diagram),
                "positive3": obstruction.model_dump(),
            },
            timings_ms={"homology": t["duration_ms"]},
        )
        text = render_table(table) + f"positive 3-braid check: {obstruction.render()}\n"
        if obstruction.remark:
            text += f"  ({obstruction.remark})\n"
        return report, text

    def verify(self, word: str, golden: str | None = None) -> tuple[RunReport, str]:
        verifier = BraidVerifier(self.oracle, self.synthesizer)
        with timer(logger, "verify") as t:
            verdicts, shape, _ = verifier.verify(parse_word(word, 3), golden)
        report = RunReport(
            command="verify",
            input=word,
            outputs={"shape": table_record(shape)},
            timings_ms={"verify": t["duration_ms"]},
            verdicts=verdicts,
        )
        return report, _render_verdicts(verdicts)

    # --- Rational diagrams ---

    def rational(
        self, action: str, code_text: str, index: int | None, with_homology: bool
    ) -> tuple[RunReport, str]:
        code = parse_code(code_text)
        outputs: dict[str, Any] = {}
        verdicts: list[Verdict] = []

        if action == "u":
            outputs["code"] = u_transform(code).render()
        elif action == "t":
            if index is None:
                raise PreconditionError("rational t needs --index")
            outputs["code"] = t_transform(code, index).render()
        elif action == "alt":
            result, book = alternating_code(code)
            outputs["code"] = result.render()
            outputs["bookkeeping"] = book.model_dump()
        else:
            # 1. Rewrite and measure the crossing census on both diagrams
            result, book = alternating_code(code)
            measured = measure_bookkeeping(code, result)
            d_prime = from_rational_code(result)
            outputs.update(code=result.render(), bookkeeping=book.model_dump())
            verdicts.append(_check("alternating", is_alternating(result)))
            verdicts.append(_check("a-adequate", is_a_adequate(d_prime)))
            verdicts.append(
                _check("bookkeeping", measured == book, f"measured {measured.model_dump()}")
            )
            # 2. Optionally compare the homology of the two diagrams
            if with_homology:
                d = from_rational_code(code)
                if component_count(d) == 1:
                    verdicts.append(
                        TableComparator.exact(
                            "homology", self.oracle.homology(d), self.oracle.homology(d_prime)
                        )
                    )
                else:
                    logger.info("homology comparison skipped for a two-component link")

        report = RunReport(
            command=f"rational {action}", input=code_text, outputs=outputs, verdicts=verdicts
        )
        text = "".join(f"{k}: {v}\n" for k, v in outputs.items()) + _render_verdicts(verdicts)
        return report, text

    # --- Benchmark ---

    def bench(self, lengths: list[int], trials: int, seed: int) -> tuple[RunReport, str]:
        result = run_benchmark(lengths, trials, seed)
        lines = [f"{'length':>10} | {'median ms':>10} | {'min ms':>10} | {'max ms':>10}"]
        for row in result.rows:
            lines.append(
                f"{row.length:>10} | {row.median_ms:>10.3f} | {row.min_ms:>10.3f} | "
                f"{row.max_ms:>10.3f}"
            )
        if result.ratio is not None:
            lines.append(
                f"ratio {result.ratio} (linear: {result.linear_ratio}), "
                f"scaling exponent {result.scaling_exponent}"
            )
        report = RunReport(
            command="bench", input=" ".join(map(str, lengths)), outputs=result.model_dump()
        )
        return report, "\n".join(lines) + "\n"


def _check(name: str, ok: bool, detail: str = "") -> Verdict:
    return Verdict(
        name=name, status=VerdictStatus.PASS if ok else VerdictStatus.FAIL, detail=detail
    )


def _render_verdicts(verdicts: list[Verdict]) -> str:
    lines = []
    for v in verdicts:
        line = f"{v.status.value.upper()} {v.name}"
        if v.witness:
            w = v.witness
            line += f": ({w.i},{w.j}) expected {w.expected} found {w.found}"
        elif v.detail:
            line += f" ({v.detail})"
        lines.append(line)
    return "".join(f"{line}\n" for line in lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tribraid", description="Garside normal forms and Khovanov tables of 3-braids"
    )
    parser.add_argument("--format", choices=["ascii", "json"], default="ascii")
    parser.add_argument("--seed", type=int, default=None, help="Seed for randomized commands")
    parser.add_argument("--output", type=str, default=None, help="Write results to this file")
    parser.add_argument("--save", action="store_true", help="Also write a report to REPORT_DIR")
    parser.add_argument("--max-crossings", type=int, default=None, help="Oracle crossing guard")
    parser.add_argument("--workers", type=int, default=None, help="Oracle worker processes")
    parser.add_argument("--log-json", action="store_true", help="JSON Lines logs on stderr")
    parser.add_argument("--verbose", "-v", action="store_true", help="Debug logging")

    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("nf", "Left normal form"),
        ("classify", "Summit family and closed-positive family"),
        ("summit", "Summit infimum"),
        ("shape", "Closed-form partial Khovanov table"),
    ):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("word", help="Braid word, e.g. 's1 s2^-1' or 'abAB'")

    homology = sub.add_parser("homology", help="Exact Khovanov homology")
    source = homology.add_mutually_exclusive_group(required=True)
    source.add_argument("word", nargs="?", help="Braid word whose closure is used")
    source.add_argument("--code", help="Rational code, e.g. '3,2,2'")
    source.add_argument("--pd", help="PD text file")
    homology.add_argument("--strands", type=int, default=3)
    homology.add_argument("--export-pd", default=None, help="Write the diagram as PD text")

    verify = sub.add_parser("verify", help="Closed-form table vs oracle vs known tables")
    verify.add_argument("word")
    verify.add_argument("--golden", default=None, help="Alternative known-table file")

    rational = sub.add_parser("rational", help="Rational diagram rewriting")
    rational.add_argument("action", choices=["u", "t", "alt", "check"])
    rational.add_argument("code", help="Comma-separated code, e.g. '3,2,2'")
    rational.add_argument("--index", type=int, default=None, help="1-based index for t")
    rational.add_argument("--homology", action="store_true", help="check: compare homology")

    bench = sub.add_parser("bench", help="Linear-time benchmark")
    bench.add_argument("--lengths", type=int, nargs="+", default=[250_000, 1_000_000])
    bench.add_argument("--trials", type=int, default=5)
    return parser


def dispatch(engine: TribraidEngine, args: argparse.Namespace, seed: int) -> tuple[RunReport, str]:
    if args.command == "nf":
        return engine.nf(args.word)
    if args.command == "classify":
        return engine.classify(args.word)
    if args.command == "summit":
        return engine.summit(args.word)
    if args.command == "shape":
        return engine.shape(args.word)
    if args.command == "homology":
        if args.pd:
            diagram, source = parse_pd_text(safe_read_file(args.pd)), args.pd
        elif args.code:
            diagram, source = from_rational_code(parse_code(args.code)), args.code
        else:
            diagram, source = from_braid_closure(parse_word(args.word, args.strands)), args.word
        return engine.homology(diagram, source, args.export_pd)
    if args.command == "verify":
        return engine.verify(args.word, args.golden)
    if args.command == "rational":
        return engine.rational(args.action, args.code, args.index, args.homology)
    return engine.bench(args.lengths, args.trials, seed)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    settings = get_settings()
    level = logging.DEBUG if args.verbose else settings.LOG_LEVEL
    setup_logger("tribraid", level=level, json_format=args.log_json or settings.LOG_JSON)
    seed = settings.DEFAULT_SEED if args.seed is None else args.seed

    try:
        engine = TribraidEngine(settings, max_crossings=args.max_crossings, workers=args.workers)
        report, text = dispatch(engine, args, seed)
        output = report.model_dump_json(indent=2) + "\n" if args.format == "json" else text
        if args.output:
            safe_write_file(Path(args.output), output)
        else:
            sys.stdout.write(output)
        if args.save:
            path = save_report(args.command, report.model_dump_json(indent=2))
            logger.info(f"report saved to {path}")
    except TribraidError as e:
        logger.debug("command failed", exc_info=True)
        sys.stderr.write(f"error: {e}\n")
        return EXIT_ERROR
    except (OSError, ValueError) as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_ERROR

    return EXIT_OK if report.passed else EXIT_VERIFICATION_FAILED


if __name__ == "__main__":
    sys.exit(main())
