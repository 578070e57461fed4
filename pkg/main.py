from __future__ import annotations
import argparse
import logging
import sys
from typing import Dict, List, Optional

from pydantic import ValidationError

from hgraph import BudgetExceeded, SkeletalError, StageFailed
from harness import HANDLERS, Caps, RunConfig, failure_outcome, load_config, write_artifacts

logger = logging.getLogger("skeletal")


# -----------------------------------------------------------------------------
# Argument parsing
# -----------------------------------------------------------------------------
class UsageError(Exception):
    pass


class SkeletalParser(argparse.ArgumentParser):
    """Usage problems exit with status 1 instead of argparse's 2, which is reserved for failed stages."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def parse_caps(pairs: Optional[List[str]]) -> Dict[str, float]:
    caps: Dict[str, float] = {}
    for pair in pairs or []:
        key, sep, value = pair.partition("=")
        key = key.strip().replace("-", "_")
        if not sep or key not in Caps.model_fields:
            raise UsageError(f"--cap expects NAME=VALUE with NAME in {', '.join(Caps.model_fields)}, got {pair!r}")
        try:
            caps[key] = float(value) if key == "ramsey_bits" else int(value)
        except ValueError:
            raise UsageError(f"--cap {key} needs a number, got {value!r}")
    return caps


def build_parser() -> SkeletalParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=lambda s: int(s, 0), help="Root seed (64-bit)")
    common.add_argument("--retries", type=int, help="Attempts per randomized stage")
    common.add_argument("--cap", action="append", metavar="NAME=VALUE", help="Override an oracle budget")
    common.add_argument("--budget", type=int, help="Search-node budget for the exhaustive engines")
    common.add_argument("--out", help="Artifact path; stdout when omitted")
    common.add_argument("--format", choices=["json", "csv"])
    common.add_argument("--paper-constants", action="store_true", default=None)
    common.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"])

    parser = SkeletalParser(prog="skeletal", description="Skeletal degeneracy toolkit")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=SkeletalParser)

    p = sub.add_parser("gen", parents=[common], help="Emit a hypergraph from a named family")
    p.add_argument("family", choices=["complete-kpartite", "hedgehog", "latin", "erdos-renyi", "kpartite-random", "anchors", "lift"])
    p.add_argument("--sizes", help="Comma-separated part sizes")
    p.add_argument("--k", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--ell", type=int)
    p.add_argument("--random", action="store_true", help="Random rather than cyclic Latin square")
    p.add_argument("--in", dest="input")

    p = sub.add_parser("degeneracy", parents=[common], help="Skeletal degeneracies with certificates")
    p.add_argument("--in", dest="input")
    p.add_argument("--i", type=int, help="Skeleton index")

    p = sub.add_parser("validate", parents=[common], help="Check a hypergraph or coloring file")
    p.add_argument("--in", dest="input")
    p.add_argument("--kind", choices=["auto", "hypergraph", "coloring"], default="auto")

    p = sub.add_parser("prune", parents=[common], help="Dependent random choice pruning")
    p.add_argument("--in", dest="input")
    p.add_argument("--mode", choices=["pipeline", "simultaneous"], default="pipeline")
    p.add_argument("--schedule", choices=["standard", "almost-linear"], default="standard")
    p.add_argument("--d", type=int)
    p.add_argument("--t", type=int, help="Tuple length of a simultaneous round")
    p.add_argument("--epsilon0", help="Density exponent as a fraction, e.g. 1/100")
    p.add_argument("--lam", type=int)
    p.add_argument("--h", type=int)

    p = sub.add_parser("embed", parents=[common], help="Embed a pattern into a dense partite host")
    p.add_argument("--host")
    p.add_argument("--pattern")
    p.add_argument("--mode", choices=["greedy", "anchored"], default="greedy")
    p.add_argument("--theta", type=float)
    p.add_argument("--eta", type=float)
    p.add_argument("--t", type=int)
    p.add_argument("--prune-t", type=int)
    p.add_argument("--tuple-length", type=int)
    p.add_argument("--epsilon", type=float)
    p.add_argument("--epsilon-prime", type=float)

    p = sub.add_parser("turan-lb", parents=[common], help="Deletion-method lower-bound constructions")
    p.add_argument("--family", choices=["complete", "skeletal"])
    p.add_argument("--pattern")
    p.add_argument("--k", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--i", type=int)
    p.add_argument("--seeds", help="A seed or an inclusive range S0..S1")

    p = sub.add_parser("brute-ex", parents=[common], help="Exact Turán number by exhaustive search")
    p.add_argument("--pattern")
    p.add_argument("--n", type=int)

    p = sub.add_parser("brute-ramsey", parents=[common], help="Exact Ramsey number by exhaustive search")
    p.add_argument("--pattern")
    p.add_argument("--q", type=int)
    p.add_argument("--N-max", dest="N_max", type=int)

    p = sub.add_parser("ramsey", parents=[common], help="Monochromatic copies over a batch of colorings")
    p.add_argument("--pattern")
    p.add_argument("--q", type=int)
    p.add_argument("--N", dest="N", type=int)
    p.add_argument("--strategy", choices=["oracle", "pipeline"], default="oracle")
    p.add_argument("--machinery", choices=["oracle", "extending"], default="oracle")
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--samples", type=int, default=16)
    p.add_argument("--ell", type=int)
    return parser


# -----------------------------------------------------------------------------
# Entry point
# -----------------------------------------------------------------------------
def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        caps = parse_caps(args.cap)
        if args.budget is not None:
            caps["search_nodes"] = args.budget
        config = load_config().with_overrides(
            seed=args.seed,
            retries=args.retries,
            out=args.out,
            format=args.format,
            paper_constants=args.paper_constants,
            log_level=args.log_level,
            caps=caps,
        )
    except UsageError as e:
        print(e, file=sys.stderr)
        return 1
    except ValidationError as e:
        print(f"skeletal: invalid configuration: {e}", file=sys.stderr)
        return 1

    logging.basicConfig(
        level=config.log_level,
        format="%(asctime)s  %(levelname)s  %(name)s  %(message)s",
        handlers=[logging.StreamHandler()],
    )
    logger.info(f"🚀 skeletal {args.command} (seed {config.seed})")

    try:
        outcome = HANDLERS[args.command](args, config)
    except (StageFailed, BudgetExceeded) as e:
        logger.error(f"❌ {args.command} failed: {e}")
        outcome = failure_outcome(e)
    except (SkeletalError, ValidationError) as e:
        logger.error(f"❌ {e}")
        return 1
    except OSError as e:
        logger.error(f"❌ cannot read input: {e}")
        return 1
    except Exception as e:
        logger.error(f"💥 {args.command} crashed: {e}", exc_info=True)
        raise

    write_artifacts(args.command, config, outcome)
    return outcome.exit_code


if __name__ == "__main__":
    sys.exit(main())
