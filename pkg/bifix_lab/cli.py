"""
Command line for bifix_lab.

    bifix-lab generate --set fibonacci --up-to 8
    bifix-lab classify --morphism chacon.json --up-to 4
    bifix-lab transform --set fibonacci --code "aa ab ba" --pivot a
    bifix-lab group index --alphabet a,b --words "a bab baab"
    bifix-lab verify --parallel --format json

Exit status: 0 on success, 1 when an analysis fails (for instance a code that
is not S-maximal), 2 on usage, symbol, configuration or horizon errors.
"""

import argparse
import dataclasses
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence, TextIO

from .config import OUTPUT_FORMATS, CliConfig, LabConfig
from .core.alphabet import Alphabet, Word
from .core.codes import (
    BifixCode,
    arity_sum,
    bifix_decode,
    code_predicates,
    coding_morphism,
    enumerate_s_maximal_bifix,
    internal_transformation,
    is_s_maximal,
    kernel,
    parse_count,
    parses,
    s_degree,
    transformation_parts,
)
from .core.errors import (
    BifixLabError,
    ConfigError,
    HorizonError,
    MorphismError,
    SymbolError,
)
from .core.extensions import WordClassification, classify_set, classify_word
from .core.groups import (
    GroupWord,
    IndexMarker,
    SubgroupGraph,
    contains,
    coset_transversal,
    dependency_witness,
    free_reduce,
    stallings_fold,
    subgroup_index,
    subgroup_rank,
)
from .core.words import FactorSet, FixpointSpec, complexity_profile, render_words
from .lab.registry import BUILTIN_NAMES, default_registry
from .lab.suite import run_suite
from .visualization import LabVisualizer

logger = logging.getLogger(__name__)

DEFAULT_HORIZON = LabConfig.horizon
GROUP_ACTIONS = ("index", "rank", "basis", "contains", "transversal", "fold")
USAGE_ERRORS = (HorizonError, SymbolError, ConfigError, MorphismError, json.JSONDecodeError)

Handler = Callable[[argparse.Namespace, CliConfig, TextIO], int]


def _emit_json(out: TextIO, data: Any) -> None:
    out.write(json.dumps(data, indent=2, ensure_ascii=False) + "\n")


def _emit(out: TextIO, text: str) -> None:
    out.write(text + "\n")


def _read_text(value: str) -> str:
    """Argument value, or standard input for '-'."""
    return sys.stdin.read() if value == "-" else value


def _load_json(path: str) -> Any:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc}") from exc
    return json.loads(text)


def _morphism_spec(path: str) -> FixpointSpec:
    data = _load_json(path)
    if not isinstance(data, dict):
        raise ConfigError("morphism spec must be a JSON object", "morphism")
    return FixpointSpec.from_json(data)


def _fixpoint(config: CliConfig) -> Optional[FixpointSpec]:
    if config.builtin:
        return default_registry().get(config.builtin).fixpoint
    if config.morphism_path:
        return _morphism_spec(config.morphism_path)
    return None


def _factor_set(config: CliConfig) -> FactorSet:
    """The set named by exactly one of --set, --morphism, --factors."""
    if len(config.inputs) != 1:
        raise ConfigError("give exactly one of --set, --morphism, --factors", "set")
    horizon = config.horizon or DEFAULT_HORIZON
    if config.builtin:
        return default_registry().get(config.builtin).build(horizon)
    if config.morphism_path:
        return _morphism_spec(config.morphism_path).factor_set(horizon)
    data = _load_json(config.factors_path)
    try:
        S = FactorSet.from_json(data)
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise ConfigError(f"malformed factor set {config.factors_path}: {exc}", "factors") from exc
    return S.truncate(config.horizon) if config.horizon else S


def _words_from_json(data: Mapping[str, Any], index: int) -> Mapping[str, Any]:
    """Locate the code inside any JSON artifact this command line writes."""
    if "codes" in data:
        codes = data["codes"]
        if not 0 <= index < len(codes):
            raise ConfigError(f"--index {index} outside 0..{len(codes) - 1}", "index")
        return dict(codes[index])
    if "code" in data and isinstance(data["code"], dict):
        return dict(data["code"])
    return data


def _code_words(config: CliConfig, alphabet: Alphabet) -> List[Word]:
    """Raw codewords from --code or --code-file, unchecked."""
    path = config.code_path
    if path:
        raw = sys.stdin.read() if path == "-" else None
        if raw is None:
            try:
                raw = Path(path).read_text(encoding="utf-8")
            except OSError as exc:
                raise ConfigError(f"cannot read {path}: {exc}") from exc
        if raw.lstrip().startswith("{"):
            data = _words_from_json(json.loads(raw), config.code_index)
            if "alphabet" in data and tuple(data["alphabet"]) != alphabet.letters:
                raise ConfigError(
                    f"code alphabet {data['alphabet']} differs from {list(alphabet.letters)}",
                    "code-file",
                )
            key = "words" if "words" in data else "returns"
            if key not in data:
                raise ConfigError(f"{path} holds no word list", "code-file")
            return [alphabet.word(w) for w in data[key]]
        return alphabet.parse_many(raw)
    if config.code_text:
        return alphabet.parse_many(_read_text(config.code_text))
    raise ConfigError("give --code or --code-file", "code")


def _code(config: CliConfig, alphabet: Alphabet) -> BifixCode:
    return BifixCode(alphabet, tuple(_code_words(config, alphabet)))


def _require_format(config: CliConfig, allowed: Sequence[str]) -> None:
    if config.output_format not in allowed:
        raise ConfigError(
            f"{config.subcommand} does not support --format {config.output_format}", "format"
        )


def _classification_json(S: FactorSet, c: WordClassification) -> Dict[str, Any]:
    symbol = S.alphabet.symbol
    cycle = c.graph.cycle
    return {
        "word": S.alphabet.render(c.word),
        "left": [symbol(a) for a in sorted(c.profile.left)],
        "right": [symbol(b) for b in sorted(c.profile.right)],
        "pairs": [[symbol(a), symbol(b)] for a, b in sorted(c.profile.pairs)],
        "m": c.profile.m,
        "class": c.word_class.value,
        "ordinary": c.ordinary,
        "acyclic": c.acyclic,
        "tree": c.tree,
        "components": c.graph.components,
        "cycle": None if cycle is None else [f"{side}:{symbol(a)}" for side, a in cycle],
    }


def cmd_generate(args: argparse.Namespace, config: CliConfig, out: TextIO) -> int:
    _require_format(config, ("text", "json"))
    if args.prefix:
        spec = _fixpoint(config)
        if spec is None:
            raise ConfigError("--prefix needs --set or --morphism", "prefix")
        _emit(out, spec.alphabet.render(spec.prefix(args.prefix)))
        return 0
    S = _factor_set(config)
    if config.output_format == "json":
        _emit_json(out, S.to_json())
        return 0
    _emit(out, repr(S))
    if S.certificate is not None:
        _emit(out, f"certificate: {json.dumps(S.certificate.to_json())}")
    _emit(out, LabVisualizer().word_table(S, args.up_to if args.up_to is not None else 10))
    return 0


def cmd_classify(args: argparse.Namespace, config: CliConfig, out: TextIO) -> int:
    S = _factor_set(config)
    visualizer = LabVisualizer()
    if args.word is not None:
        c = classify_word(S, S.alphabet.parse(args.word))
        if config.output_format == "dot":
            _emit(out, visualizer.extension_graph_dot(S, c.graph))
        elif config.output_format == "json":
            _emit_json(out, _classification_json(S, c))
        else:
            _emit(out, visualizer.classification_table(S, [c]))
            if c.graph.cycle is not None:
                data = _classification_json(S, c)
                _emit(out, f"cycle: {' '.join(data['cycle'])}")
        return 0

    _require_format(config, ("text", "json"))
    up_to = args.up_to if args.up_to is not None else min(10, S.horizon - 2)
    verdict = classify_set(S, up_to)
    if config.output_format == "json":
        _emit_json(
            out,
            {
                "set": S.name,
                "verdict": verdict.to_json(S),
                "class": verdict.class_name(),
                "words": [_classification_json(S, c) for c in verdict.classifications],
            },
        )
        return 0
    _emit(out, visualizer.classification_table(S, verdict.classifications))
    _emit(out, "")
    _emit(out, f"class up to length {up_to}: {verdict.class_name()}")
    flags = verdict.to_json(S)
    for name, value in verdict.flags.items():
        witness = flags["witnesses"][name]
        _emit(out, f"  {name:<8} {'yes' if value else 'no'}" + (f"  (fails at {witness})" if witness else ""))
    return 0


def cmd_complexity(args: argparse.Namespace, config: CliConfig, out: TextIO) -> int:
    _require_format(config, ("text", "json"))
    S = _factor_set(config)
    profile = complexity_profile(S)
    slope = profile.p[1] - profile.p[0] if len(profile.p) > 1 else 0
    defect = profile.linear_defect(slope, profile.p[0])
    if config.output_format == "json":
        data = profile.to_json()
        data.update({"set": S.name, "horizon": S.horizon, "slope": slope, "linear_until": defect})
        _emit_json(out, data)
        return 0
    _emit(out, LabVisualizer().complexity_table(profile, args.up_to))
    if defect is None:
        _emit(out, f"p_n = {slope}n + {profile.p[0]} for n <= {S.horizon}")
    else:
        _emit(out, f"p_n leaves {slope}n + {profile.p[0]} at n = {defect}")
    return 0


def cmd_code_check(args: argparse.Namespace, config: CliConfig, out: TextIO) -> int:
    _require_format(config, ("text", "json"))
    S = _factor_set(config)
    render = S.alphabet.render
    words = _code_words(config, S.alphabet)
    predicates = code_predicates(words)
    result: Dict[str, Any] = {
        "prefix": predicates.prefix,
        "suffix": predicates.suffix,
        "bifix": predicates.bifix,
    }
    for kind, pair in (("prefix", predicates.prefix_witness), ("suffix", predicates.suffix_witness)):
        if pair is not None:
            result[f"{kind}_witness"] = [render(pair[0]), render(pair[1])]
    outside = [render(w) for w in words if w not in S]
    result["outside"] = outside
    ok = predicates.bifix and not outside
    if ok:
        X = BifixCode(S.alphabet, tuple(words))
        maximality = is_s_maximal(X, S)
        result["code"] = X.to_json()
        result["card"] = len(X)
        result["maximal"] = maximality.maximal
        result["kernel"] = [render(w) for w in kernel(X)]
        if maximality.maximal:
            result["degree"] = s_degree(X, S)
            result["arity"] = 1 + arity_sum(X, S)
        else:
            result["maximality_witness"] = render(maximality.witness or ())
        ok = maximality.maximal
    if config.output_format == "json":
        _emit_json(out, result)
    else:
        _emit(out, LabVisualizer().key_value_block(
            {k: v for k, v in result.items() if k != "code"}
        ))
    return 0 if ok else 1


def cmd_code_degree(args: argparse.Namespace, config: CliConfig, out: TextIO) -> int:
    _require_format(config, ("text", "json"))
    S = _factor_set(config)
    X = _code(config, S.alphabet)
    render = S.alphabet.render
    maximality = is_s_maximal(X, S)
    result: Dict[str, Any] = {"code": X.render(), "maximal": maximality.maximal}
    if maximality.maximal:
        result["degree"] = s_degree(X, S)
    if args.word is not None:
        w = S.alphabet.parse(args.word)
        result["word"] = render(w)
        result["parse_count"] = parse_count(X, w)
        result["parses"] = [p.render(S.alphabet) for p in parses(X, w)]
    if config.output_format == "json":
        _emit_json(out, result)
    else:
        if maximality.maximal:
            _emit(out, f"S-degree {result['degree']}")
        else:
            _emit(out, f"not S-maximal: {render(maximality.witness or ())} has no prefix in X")
        if args.word is not None:
            _emit(out, f"δ({result['word']}) = {result['parse_count']}")
            for text in result["parses"]:
                _emit(out, f"  {text}")
    return 0 if maximality.maximal else 1


def cmd_transform(args: argparse.Namespace, config: CliConfig, out: TextIO) -> int:
    _require_format(config, ("text", "json"))
    S = _factor_set(config)
    X = _code(config, S.alphabet)
    w = S.alphabet.parse(args.pivot)
    Y = internal_transformation(X, S, w)
    parts = transformation_parts(X, w)

    def names(words: Any) -> List[str]:
        return render_words(S.alphabet, words)

    if config.output_format == "json":
        _emit_json(
            out,
            {
                "pivot": S.alphabet.render(w),
                "code": Y.to_json(),
                "degree": s_degree(Y, S),
                "parts": {
                    "G": names(parts.G),
                    "D": names(parts.D),
                    "G0": names(parts.G0),
                    "D0": names(parts.D0),
                },
            },
        )
        return 0
    _emit(out, " ".join(Y.render()))
    if args.verbose:
        for label, words in (("G", parts.G), ("D", parts.D), ("G0", parts.G0), ("D0", parts.D0)):
            _emit(out, f"{label}: {LabVisualizer().words_line(names(words))}")
    return 0


def cmd_enumerate(args: argparse.Namespace, config: CliConfig, out: TextIO) -> int:
    _require_format(config, ("text", "json"))
    S = _factor_set(config)
    codes = enumerate_s_maximal_bifix(S, args.degree, args.max_len)
    if config.output_format == "json":
        _emit_json(
            out,
            {"degree": args.degree, "max_len": args.max_len, "codes": [X.to_json() for X in codes]},
        )
        return 0
    _emit(out, f"{len(codes)} S-maximal bifix codes of S-degree {args.degree}, words <= {args.max_len}")
    if codes:
        _emit(out, LabVisualizer().code_table(codes))
    return 0


def cmd_decode(args: argparse.Namespace, config: CliConfig, out: TextIO) -> int:
    _require_format(config, ("text", "json"))
    S = _factor_set(config)
    X = _code(config, S.alphabet)
    letters = args.letters.split(",") if args.letters else None
    coding = coding_morphism(X, letters)
    decoded = bifix_decode(S, coding, args.decoded_horizon, name=f"{S.name}-decoded")
    mapping = {
        coding.alphabet.symbol(b): S.alphabet.render(image)
        for b, image in enumerate(coding.morphism.images)
    }
    if config.output_format == "json":
        data = decoded.to_json()
        data["coding"] = mapping
        _emit_json(out, data)
        return 0
    for letter, image in mapping.items():
        _emit(out, f"{letter} -> {image}")
    _emit(out, LabVisualizer().word_table(decoded))
    return 0


def cmd_returns(args: argparse.Namespace, config: CliConfig, out: TextIO) -> int:
    _require_format(config, ("text", "json"))
    spec = _fixpoint(config)
    if spec is None:
        raise ConfigError("returns needs --morphism or a builtin fixpoint set", "set")
    alphabet = spec.alphabet
    w = alphabet.parse(args.word)
    found = spec.return_words(w, args.scan_len)
    graph = stallings_fold(found.returns, alphabet)
    index = subgroup_index(graph)
    rank = subgroup_rank(graph)
    result = {
        "alphabet": list(alphabet.letters),
        "word": alphabet.render(w),
        "returns": [alphabet.to_json_word(x) for x in found.returns],
        "complete": found.complete,
        "scan_len": found.scan_len,
        "occurrences": found.occurrences,
        "index": "infinite" if index is IndexMarker.INFINITE else index,
        "rank": rank,
    }
    if config.output_format == "json":
        _emit_json(out, result)
    else:
        _emit(out, " ".join(alphabet.render(x) for x in found.returns))
        _emit(out, f"complete: {'yes' if found.complete else 'no'} (scan {found.scan_len})")
        _emit(out, f"index {result['index']}, rank {rank}")
    return 0 if found.complete else 1


def _group_alphabet(args: argparse.Namespace, config: CliConfig) -> Alphabet:
    if args.alphabet:
        return Alphabet(tuple(s.strip() for s in args.alphabet.split(",")))
    if config.inputs:
        return _factor_set(config).alphabet
    raise ConfigError("group needs --alphabet or an input set", "alphabet")


def cmd_group(args: argparse.Namespace, config: CliConfig, out: TextIO) -> int:
    visualizer = LabVisualizer()
    if args.graph:
        data = _load_json(args.graph)
        graph = SubgroupGraph.from_json(data)
        alphabet = graph.alphabet
        generators: List[GroupWord] = []
    else:
        alphabet = _group_alphabet(args, config)
        if args.words:
            generators = [GroupWord.parse(alphabet, t) for t in _read_text(args.words).split()]
        else:
            generators = [GroupWord.from_word(w) for w in _code_words(config, alphabet)]
        graph = stallings_fold(generators, alphabet)

    if config.output_format == "dot":
        _emit(out, visualizer.subgroup_graph_dot(graph))
        return 0

    index = subgroup_index(graph)
    rank = subgroup_rank(graph)
    result: Dict[str, Any] = {
        "action": args.action,
        "index": "infinite" if index is IndexMarker.INFINITE else index,
        "rank": rank,
    }
    lines = [f"index {result['index']}", f"rank {rank}"]
    if args.action == "basis":
        distinct = {free_reduce(g) for g in generators}
        basis = bool(generators) and rank == len(distinct)
        result["basis"] = basis
        lines = [f"basis: {'yes' if basis else 'no'} (rank {rank}, {len(distinct)} generators)"]
        relation = None if basis or not generators else dependency_witness(generators, alphabet)
        if relation is not None:
            x, others = relation
            result["witness"] = {
                "element": x.render(alphabet),
                "others": [o.render(alphabet) for o in others],
            }
            lines.append(
                f"{x.render(alphabet)} lies in <{', '.join(o.render(alphabet) for o in others)}>"
            )
    elif args.action == "rank":
        lines = [f"rank {rank}"]
    elif args.action == "contains":
        if not args.element:
            raise ConfigError("contains needs --element", "element")
        member = contains(graph, GroupWord.parse(alphabet, args.element))
        result["element"] = args.element
        result["contains"] = member
        lines = [f"{args.element}: {'yes' if member else 'no'}"]
    elif args.action == "transversal":
        transversal = [t.render(alphabet) for t in coset_transversal(graph)]
        result["transversal"] = transversal
        lines = transversal
    elif args.action == "fold":
        result["graph"] = graph.to_json()
        lines = [f"{graph.vertex_count} vertices, {graph.edge_count} edges"] + [
            f"  {s} -{alphabet.symbol(a)}-> {t}" for s, a, t in graph.canonical_form()[1]
        ]
    if config.output_format == "json":
        _emit_json(out, result)
    else:
        for line in lines:
            _emit(out, line)
    return 0


def cmd_verify(args: argparse.Namespace, config: CliConfig, out: TextIO) -> int:
    _require_format(config, ("text", "json"))
    lab_config = LabConfig.from_json_file(args.config) if args.config else LabConfig()
    overrides: Dict[str, Any] = {}
    if config.horizon:
        overrides["horizon"] = config.horizon
    if args.parallel:
        overrides["parallel"] = True
    if args.only:
        overrides["only"] = [name.strip() for name in args.only.split(",") if name.strip()]
    lab_config = dataclasses.replace(lab_config, **overrides)
    report = run_suite(default_registry(), lab_config)
    if config.output_format == "json":
        _emit_json(out, report.to_dict())
    else:
        _emit(out, LabVisualizer().suite_summary(report, verbose=args.verbose))
    return 0 if report.ok else 1


COMMANDS: Dict[str, Handler] = {
    "generate": cmd_generate,
    "classify": cmd_classify,
    "complexity": cmd_complexity,
    "code-check": cmd_code_check,
    "code-degree": cmd_code_degree,
    "transform": cmd_transform,
    "enumerate": cmd_enumerate,
    "decode": cmd_decode,
    "returns": cmd_returns,
    "group": cmd_group,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", default="text", choices=OUTPUT_FORMATS)
    noise = common.add_mutually_exclusive_group()
    noise.add_argument("-v", "--verbose", action="store_true")
    noise.add_argument("-q", "--quiet", action="store_true")

    inputs = argparse.ArgumentParser(add_help=False)
    inputs.add_argument("--set", choices=BUILTIN_NAMES, help="builtin example set")
    inputs.add_argument("--morphism", help="JSON morphism spec ('-' for stdin)")
    inputs.add_argument("--factors", help="JSON factor set written by 'generate --format json'")
    inputs.add_argument("--horizon", type=int, help=f"factor length horizon (default {DEFAULT_HORIZON})")

    code = argparse.ArgumentParser(add_help=False)
    code.add_argument("--code", help='whitespace-separated words, e.g. "a bab baab"')
    code.add_argument("--code-file", help="text or JSON file holding a code ('-' for stdin)")
    code.add_argument("--index", type=int, default=0, help="which code of a JSON code list")

    parser = argparse.ArgumentParser(
        prog="bifix-lab",
        description="Factor sets, maximal bifix codes and subgroups of free groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("generate", parents=[common, inputs], help="factors of a set")
    p.add_argument("--up-to", type=int)
    p.add_argument("--prefix", type=int, help="print this many letters of the fixpoint")

    p = sub.add_parser("classify", parents=[common, inputs], help="extension classification")
    p.add_argument("--up-to", type=int)
    p.add_argument("--word", help="classify one word; --format dot draws G(w)")

    p = sub.add_parser("complexity", parents=[common, inputs], help="p_n, s_n, b_n")
    p.add_argument("--up-to", type=int)

    sub.add_parser("code-check", parents=[common, inputs, code], help="bifix and S-maximality")

    p = sub.add_parser("code-degree", parents=[common, inputs, code], help="S-degree and parses")
    p.add_argument("--word", help="count and list the parses of this word")

    p = sub.add_parser("transform", parents=[common, inputs, code], help="internal transformation")
    p.add_argument("--pivot", required=True)

    p = sub.add_parser("enumerate", parents=[common, inputs], help="S-maximal bifix codes")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--max-len", type=int, required=True)

    p = sub.add_parser("decode", parents=[common, inputs, code], help="maximal bifix decoding")
    p.add_argument("--letters", help="comma-separated names for the decoded alphabet")
    p.add_argument("--decoded-horizon", type=int, default=6)

    p = sub.add_parser("returns", parents=[common, inputs], help="first return words")
    p.add_argument("--word", required=True)
    p.add_argument("--scan-len", type=int, default=LabConfig.scan_len)

    p = sub.add_parser("group", parents=[common, inputs, code], help="subgroup queries")
    p.add_argument("action", choices=GROUP_ACTIONS)
    p.add_argument("--alphabet", help="comma-separated letters of the free group")
    p.add_argument("--words", help="generators, e.g. \"a bab ab^-1\" ('-' for stdin)")
    p.add_argument("--graph", help="JSON folded graph written by 'group fold --format json'")
    p.add_argument("--element", help="group word for 'contains', e.g. \"ca aa^-1 ab\"")

    p = sub.add_parser("verify", parents=[common], help="run the theorem lab")
    p.add_argument("--config", help="JSON LabConfig")
    p.add_argument("--horizon", type=int)
    p.add_argument("--parallel", action="store_true")
    p.add_argument("--only", help="comma-separated registry entries")
    return parser


def _configure_logging(args: argparse.Namespace) -> None:
    level = logging.WARNING
    if args.verbose:
        level = logging.DEBUG
    elif args.quiet:
        level = logging.ERROR
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger().setLevel(level)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    _configure_logging(args)
    out = sys.stdout
    try:
        config = CliConfig(
            subcommand=args.command,
            output_format=args.format,
            horizon=getattr(args, "horizon", None),
            morphism_path=getattr(args, "morphism", None),
            factors_path=getattr(args, "factors", None),
            builtin=getattr(args, "set", None),
            code_text=getattr(args, "code", None),
            code_path=getattr(args, "code_file", None),
            code_index=getattr(args, "index", 0),
        )
        return COMMANDS[args.command](args, config, out)
    except USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BifixLabError as exc:
        print(f"failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
