"""
gen 서브커맨드
계열 이름과 파라미터로 부호 그래프를 만들어 SG 파일로 저장합니다.
"""
import argparse
import logging
from typing import Callable, Dict

from ..data.catalog import get_catalog
from ..exceptions import BadParams
from ..models.graph import Sign, SignedGraph
from ..services.generators import (
    gen_family,
    gen_shift,
    gen_signed_shift3,
    girth_family,
    random_girth_graph,
    random_k3free_signed_graph,
    random_k4free_signed_graph,
    random_orientation,
    random_signed_graph,
    sample_p4class_member,
    signed_line_graph,
    with_sign,
)
from ..services.sgfile import read_sg, write_sg

logger = logging.getLogger(__name__)


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise BadParams(f"{args.family} 에 필요한 옵션: {', '.join(missing)}")


def _catalog(name: str) -> Callable[[argparse.Namespace], SignedGraph]:
    return lambda args: get_catalog().get(name)


def _neg_clique(args):
    _require(args, "i")
    return gen_family("neg_clique", i=args.i)


def _from_input(family: str):
    def build(args):
        _require(args, "input")
        return gen_family(family, graph=read_sg(args.input))

    return build


def _shift(args):
    _require(args, "k", "n")
    return with_sign(gen_shift(args.k, args.n), Sign.POS)


def _signed_shift(args):
    _require(args, "n")
    return gen_signed_shift3(args.n)


def _line_graph(args):
    _require(args, "n")
    graph = random_girth_graph(args.n, 4, args.p, args.seed)
    return signed_line_graph(random_orientation(graph, args.seed, 1))


def _p4class(args):
    _require(args, "n")
    return sample_p4class_member(args.n, args.seed, neg_prob=args.neg_prob)


def _girth(args):
    _require(args, "n", "girth")
    return girth_family(f"girth_{args.variant}", args.n, args.girth, args.p, args.seed)


def _random(args):
    _require(args, "n")
    return random_signed_graph(args.n, args.p, args.seed, neg_prob=args.neg_prob)


def _k3free(args):
    _require(args, "n")
    return random_k3free_signed_graph(args.n, args.p, args.seed, neg_prob=args.neg_prob)


def _k4free(args):
    _require(args, "n")
    return random_k4free_signed_graph(args.n, args.p, args.seed, neg_prob=args.neg_prob)


FAMILIES: Dict[str, Callable[[argparse.Namespace], SignedGraph]] = {
    "neg-clique": _neg_clique,
    "all-neg": _from_input("all_neg"),
    "positive-completion": _from_input("positive_completion"),
    "q3": _catalog("q3-pos"),
    "q3-sigma": _catalog("q3-sigma"),
    "k4m": _catalog("k4m"),
    "pc-c5": _catalog("pc-c5"),
    "shift": _shift,
    "signed-shift": _signed_shift,
    "line-graph": _line_graph,
    "p4class": _p4class,
    "girth": _girth,
    "random": _random,
    "k3free": _k3free,
    "k4free": _k4free,
}


def handle(args: argparse.Namespace) -> int:
    g = FAMILIES[args.family](args)
    params = {k: v for k, v in vars(args).items() if k not in ("command", "handler", "output", "log_level") and v is not None}
    write_sg(g, args.output, comments=[f"{k}={v}" for k, v in sorted(params.items())])
    logger.info(f"✅ {args.family} 생성: n={g.n}, m={g.m} → {args.output}")
    print(f"{args.output}: n={g.n} m={g.m}")
    return 0


def register(subparsers) -> None:
    parser = subparsers.add_parser("gen", help="부호 그래프 생성")
    parser.add_argument("family", choices=sorted(FAMILIES), help="생성할 계열")
    parser.add_argument("-o", "--output", required=True, help="출력 SG 파일")
    parser.add_argument("--i", type=int, help="neg-clique 크기")
    parser.add_argument("--k", type=int, help="shift 수열 길이")
    parser.add_argument("--n", type=int, help="정점 수 / shift 의 n")
    parser.add_argument("--p", type=float, default=0.5, help="간선 확률")
    parser.add_argument("--neg-prob", type=float, default=None, help="음의 간선 확률")
    parser.add_argument("--girth", type=int, help="최소 girth")
    parser.add_argument("--variant", choices=["neg", "pc"], default="neg", help="girth 계열 서명")
    parser.add_argument("--input", help="all-neg / positive-completion 의 기저 그래프 SG 파일")
    parser.add_argument("--seed", type=int, default=0, help="시드")
    parser.set_defaults(handler=handle)
