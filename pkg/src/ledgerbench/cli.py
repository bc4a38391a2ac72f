"""Batch command-line interface orchestrating the pipeline end to end.

Subcommands mirror the pipeline: generate -> statements -> inject -> tasks
-> eval -> report, plus verify for the property suite. Every subcommand
writes a run manifest with content digests of the inputs it consumed and
the artifacts it produced. Exit codes: 2 invalid configuration or missing
input, 3 simulation failure, 4 bundle contract failure, 5 verification
violations, 1 unexpected error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from dataclasses import replace
from pathlib import Path

from . import __version__
from . import statements as st
from .audit import ErrorKind, InjectionPlan, inject, render_corpus
from .catalog import Domain, catalog_rows
from .core import (
    CompanyKind,
    ProfileError,
    builtin_profile,
    load_profile,
    parse_date,
)
from .evaluation import (
    EndpointConfig,
    MOCK_ECHO,
    MOCK_GARBAGE,
    PriceTable,
    aggregate,
    leaderboard_row,
    load_results,
    report_csv,
    run_eval,
)
from .simulation import (
    ConfigError,
    Journal,
    SimulationConfig,
    SimulationError,
    derive_seed,
    dumps_journal,
    read_journal,
    simulate,
    write_journal,
)
from .suite import (
    BundleError,
    CaseData,
    build_catalog,
    load_bundle,
    prepare_case,
    write_bundle,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INVALID = 2
EXIT_SIMULATION = 3
EXIT_BUNDLE = 4
EXIT_VERIFY = 5

_PROFILE_ALIASES = {
    "type1": CompanyKind.TYPE_I, "typei": CompanyKind.TYPE_I,
    "type2": CompanyKind.TYPE_II, "typeii": CompanyKind.TYPE_II,
    "type3": CompanyKind.TYPE_III, "typeiii": CompanyKind.TYPE_III,
    "type4": CompanyKind.TYPE_IV, "typeiv": CompanyKind.TYPE_IV,
    "type5": CompanyKind.TYPE_V, "typev": CompanyKind.TYPE_V,
}


class CliError(Exception):
    def __init__(self, message: str, exit_code: int = EXIT_INVALID):
        super().__init__(message)
        self.exit_code = exit_code


def _fail(message: str, exit_code: int) -> "CliError":
    return CliError(message, exit_code)


def _sha256_file(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def _digest_tree(root: Path) -> dict[str, str]:
    if root.is_file():
        return {root.name: _sha256_file(root)}
    digests = {}
    for path in sorted(root.rglob("*")):
        if path.is_file():
            digests[str(path.relative_to(root))] = _sha256_file(path)
    return digests


def _public_args(args) -> dict:
    return {key: value for key, value in vars(args).items()
            if key not in ("func", "command")}


def _write_run_manifest(outdir: Path, command: str, args: dict,
                        seeds: list[int], inputs: dict[str, str],
                        started: float) -> None:
    produced = {
        rel: digest for rel, digest in _digest_tree(outdir).items()
        if rel != "run_manifest.json"
    }
    manifest = {
        "command": command,
        "arguments": args,
        "seeds": seeds,
        "input_digests": inputs,
        "output_digests": produced,
        "tool_version": __version__,
        "wall_clock_seconds": round(time.time() - started, 3),
    }
    (outdir / "run_manifest.json").write_text(
        json.dumps(manifest, indent=2) + "\n", encoding="utf-8")


def _resolve_profile(spec: str):
    key = spec.strip().lower().replace("-", "").replace("_", "")
    if key in _PROFILE_ALIASES:
        return builtin_profile(_PROFILE_ALIASES[key])
    path = Path(spec)
    if not path.exists():
        raise _fail(f"profile {spec!r}: not a builtin type or readable file",
                    EXIT_INVALID)
    return load_profile(path)


def _build_config(args) -> SimulationConfig:
    overrides = {}
    if getattr(args, "config", None):
        config_path = Path(args.config)
        if not config_path.exists():
            raise _fail(f"config file missing: {config_path}", EXIT_INVALID)
        doc = SimulationConfig(seed=args.seed,
                               start_date=parse_date(args.start)).to_dict()
        doc.update(json.loads(config_path.read_text(encoding="utf-8")))
        config = SimulationConfig.from_dict(doc)
    else:
        config = SimulationConfig(seed=args.seed,
                                  start_date=parse_date(args.start))
    if args.end:
        overrides["end_date"] = parse_date(args.end)
    if args.target_txns is not None:
        overrides["target_transactions"] = args.target_txns
    if overrides:
        config = replace(config, **overrides)
    return config


def _load_journal_arg(path_text: str) -> Journal:
    path = Path(path_text)
    if not path.exists():
        raise _fail(f"journal file missing: {path}", EXIT_INVALID)
    return read_journal(path)


# --- subcommands ----------------------------------------------------------------

def cmd_generate(args) -> int:
    started = time.time()
    profile = _resolve_profile(args.profile)
    try:
        config = _build_config(args)
        journal = simulate(profile, config)
    except (ConfigError, ProfileError, ValueError) as exc:
        raise _fail(f"invalid configuration: {exc}", EXIT_INVALID)
    except SimulationError as exc:
        raise CliError(json.dumps(exc.report), EXIT_SIMULATION)
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    write_journal(journal, outdir / "journal.jsonl")
    _write_run_manifest(outdir, "generate", _public_args(args), [config.seed], {},
                        started)
    print(f"journal: {len(journal.transactions)} transactions -> "
          f"{outdir / 'journal.jsonl'}")
    return EXIT_OK


def cmd_statements(args) -> int:
    started = time.time()
    journal = _load_journal_arg(args.journal)
    try:
        compiled = st.compile(journal)
    except st.JournalReplayError as exc:
        raise _fail(f"journal inconsistent: {exc}", EXIT_SIMULATION)
    violations = st.identity_check(compiled) + st.articulation_check(compiled)
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    (outdir / "statements.json").write_text(
        st.render(compiled, "structured"), encoding="utf-8")
    (outdir / "statements.txt").write_text(
        st.render(compiled, "text-table"), encoding="utf-8")
    (outdir / "articulation.json").write_text(
        json.dumps({"violations": violations}, indent=2) + "\n",
        encoding="utf-8")
    from .indicators import indicator_report
    (outdir / "indicators.json").write_text(
        json.dumps(indicator_report(compiled), indent=2) + "\n",
        encoding="utf-8")
    _write_run_manifest(outdir, "statements", _public_args(args),
                        [journal.config.seed],
                        {"journal": _sha256_file(Path(args.journal))}, started)
    if violations:
        raise CliError(json.dumps({"violations": violations}), EXIT_VERIFY)
    print(f"statements compiled, all checks clean -> {outdir}")
    return EXIT_OK


def _plan_from_file(path: Path) -> InjectionPlan:
    doc = json.loads(path.read_text(encoding="utf-8"))
    specs = tuple((ErrorKind(spec["kind"]), int(spec["count"]))
                  for spec in doc["specs"])
    return InjectionPlan(specs=specs, seed=int(doc["seed"]),
                         colocate=bool(doc.get("colocate", False)))


def cmd_inject(args) -> int:
    started = time.time()
    journal = _load_journal_arg(args.journal)
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    try:
        if args.plan:
            plan_path = Path(args.plan)
            if not plan_path.exists():
                raise _fail(f"plan file missing: {plan_path}", EXIT_INVALID)
            plan = _plan_from_file(plan_path)
            corrupted, manifest = inject(journal, plan)
            write_journal(corrupted, outdir / "corrupted.jsonl")
            (outdir / "corrupted.txt").write_text(
                render_corpus(corrupted), encoding="utf-8")
            (outdir / "error_manifest.json").write_text(
                json.dumps(manifest.to_dict(), indent=2) + "\n",
                encoding="utf-8")
        else:
            corrupted_dir = outdir / "corrupted"
            corrupted_dir.mkdir(exist_ok=True)
            manifests = {}
            for row in catalog_rows(Domain.AUDITING):
                plan = InjectionPlan(
                    specs=tuple((kind, 1) for kind in row.spec.kinds),
                    seed=derive_seed(journal.config.seed,
                                     f"audit:{row.task_id}"),
                    colocate=True)
                corrupted, manifest = inject(journal, plan)
                write_journal(corrupted, corrupted_dir / f"{row.task_id}.jsonl")
                (corrupted_dir / f"{row.task_id}.txt").write_text(
                    render_corpus(corrupted), encoding="utf-8")
                manifests[row.task_id] = manifest.to_dict()
            (outdir / "error_manifests.json").write_text(
                json.dumps(manifests, indent=2) + "\n", encoding="utf-8")
    except ValueError as exc:
        raise _fail(f"infeasible plan: {exc}", EXIT_SIMULATION)
    _write_run_manifest(outdir, "inject", _public_args(args), [journal.config.seed],
                        {"journal": _sha256_file(Path(args.journal))}, started)
    print(f"injection artifacts -> {outdir}")
    return EXIT_OK


def cmd_tasks(args) -> int:
    started = time.time()
    journal = _load_journal_arg(args.journal)
    corrupted_root = Path(args.corrupted)
    manifest_path = corrupted_root / "error_manifests.json"
    corrupted_dir = corrupted_root / "corrupted"
    if not manifest_path.exists() or not corrupted_dir.is_dir():
        raise _fail(
            f"missing corrupted-journal input: expected "
            f"{corrupted_dir} and {manifest_path} (run the inject step)",
            EXIT_INVALID)
    from .audit import ErrorManifest
    manifests_doc = json.loads(manifest_path.read_text(encoding="utf-8"))
    corrupted = {}
    manifests = {}
    for row in catalog_rows(Domain.AUDITING):
        journal_path = corrupted_dir / f"{row.task_id}.jsonl"
        if row.task_id not in manifests_doc or not journal_path.exists():
            raise _fail(f"missing corrupted journal for {row.task_id}",
                        EXIT_INVALID)
        corrupted[row.task_id] = read_journal(journal_path)
        manifests[row.task_id] = ErrorManifest.from_dict(
            manifests_doc[row.task_id])
    case = CaseData(journal=journal, statements=st.compile(journal),
                    corrupted=corrupted, manifests=manifests)
    example_seed = (args.example_seed if args.example_seed is not None
                    else derive_seed(journal.config.seed, "example"))
    try:
        example_case = prepare_case(
            journal.profile, replace(journal.config, seed=example_seed))
        bundle = build_catalog(case, example_case, journal.profile.kind,
                               journal.config.seed)
    except SimulationError as exc:
        raise CliError(json.dumps(exc.report), EXIT_SIMULATION)
    except BundleError as exc:
        raise CliError(str(exc), EXIT_BUNDLE)
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    write_bundle(bundle, outdir)
    _write_run_manifest(
        outdir, "tasks", _public_args(args), [journal.config.seed, example_seed],
        {"journal": _sha256_file(Path(args.journal)),
         "error_manifests": _sha256_file(manifest_path)}, started)
    print(f"bundle: {len(bundle.tasks)} tasks -> {outdir}")
    return EXIT_OK


def _resolve_endpoint(spec: str) -> EndpointConfig:
    if spec == "mock-echo":
        return EndpointConfig(base_url=MOCK_ECHO, model_name="mock-echo")
    if spec == "mock-garbage":
        return EndpointConfig(base_url=MOCK_GARBAGE, model_name="mock-garbage")
    path = Path(spec)
    if not path.exists():
        raise _fail(f"endpoint file missing: {path}", EXIT_INVALID)
    return EndpointConfig.load(path)


def cmd_eval(args) -> int:
    started = time.time()
    bundle_dir = Path(args.bundle)
    if not (bundle_dir / "tasks.json").exists():
        raise _fail(f"bundle missing tasks.json: {bundle_dir}", EXIT_INVALID)
    bundle = load_bundle(bundle_dir)
    endpoint = _resolve_endpoint(args.endpoint)
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    results_path = outdir / "results.jsonl"
    run_eval(bundle, endpoint, results_path)
    results = load_results(results_path)
    prices = PriceTable.load(args.prices) if args.prices else None
    report = aggregate(results, bundle.tasks, prices)
    _write_report(outdir, report)
    _write_run_manifest(outdir, "eval", _public_args(args), [bundle.seed],
                        {"bundle/tasks.json":
                         _sha256_file(bundle_dir / "tasks.json")}, started)
    print(leaderboard_row(report))
    return EXIT_OK


def _write_report(outdir: Path, report: dict) -> None:
    (outdir / "report.json").write_text(
        json.dumps(report, indent=2) + "\n", encoding="utf-8")
    (outdir / "report.csv").write_text(report_csv(report), encoding="utf-8")
    (outdir / "leaderboard.txt").write_text(
        leaderboard_row(report) + "\n", encoding="utf-8")


def cmd_report(args) -> int:
    started = time.time()
    results_path = Path(args.results)
    if not results_path.exists():
        raise _fail(f"results file missing: {results_path}", EXIT_INVALID)
    results = load_results(results_path)
    bundle = load_bundle(args.bundle) if args.bundle else None
    tasks = bundle.tasks if bundle else [
        {"task_id": r.task_id} for r in results]
    prices = PriceTable.load(args.prices) if args.prices else None
    report = aggregate(results, tasks, prices)
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    _write_report(outdir, report)
    _write_run_manifest(outdir, "report", _public_args(args), [],
                        {"results": _sha256_file(results_path)}, started)
    print(leaderboard_row(report))
    return EXIT_OK


def cmd_verify(args) -> int:
    from .core import BUILTIN_KINDS
    violations: list[str] = []
    checked = 0
    sizes = [int(s) for s in args.transactions.split(",")]
    for seed in range(args.seeds):
        for kind in BUILTIN_KINDS:
            profile = builtin_profile(kind)
            for target in sizes:
                config = SimulationConfig(seed=seed,
                                          target_transactions=target)
                journal = simulate(profile, config)
                compiled = st.compile(journal)
                for problem in (st.identity_check(compiled)
                                + st.articulation_check(compiled)):
                    violations.append(
                        f"seed={seed} {kind.value} target={target}: {problem}")
                checked += 1
    # Serialization determinism spot check on the first seed.
    for kind in BUILTIN_KINDS:
        profile = builtin_profile(kind)
        config = SimulationConfig(seed=0, target_transactions=sizes[0])
        first = dumps_journal(simulate(profile, config))
        second = dumps_journal(simulate(profile, config))
        if first != second:
            violations.append(f"{kind.value}: non-deterministic serialization")
    print(f"checked {checked} journals "
          f"({args.seeds} seeds x 5 profiles x {sizes} transactions)")
    if violations:
        for line in violations:
            print(f"VIOLATION {line}")
        raise CliError(json.dumps({"violations": violations}), EXIT_VERIFY)
    print("all accounting identities, articulation links, and determinism "
          "checks passed")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ledgerbench",
        description="Deterministic financial-workflow simulator and "
                    "LLM benchmark pipeline")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="simulate a company journal")
    p.add_argument("--profile", required=True,
                   help="type1..type5 or a profile JSON file")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--start", default="2024-01-01")
    p.add_argument("--end", default=None)
    p.add_argument("--target-txns", type=int, default=None)
    p.add_argument("--config", default=None,
                   help="JSON file of simulation config overrides")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("statements", help="compile the three statements")
    p.add_argument("--journal", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_statements)

    p = sub.add_parser("inject", help="plant audit errors with a manifest")
    p.add_argument("--journal", required=True)
    p.add_argument("--plan", default=None,
                   help="error-plan JSON; omit to build the full task-suite "
                        "injection set")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_inject)

    p = sub.add_parser("tasks", help="materialize the 183-task bundle")
    p.add_argument("--journal", required=True)
    p.add_argument("--corrupted", required=True,
                   help="output directory of the inject step")
    p.add_argument("--example-seed", type=int, default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_tasks)

    p = sub.add_parser("eval", help="run a model endpoint over a bundle")
    p.add_argument("--bundle", required=True)
    p.add_argument("--endpoint", required=True,
                   help="endpoint JSON file, or mock-echo / mock-garbage")
    p.add_argument("--prices", default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("report", help="re-aggregate a results file")
    p.add_argument("--results", required=True)
    p.add_argument("--bundle", default=None)
    p.add_argument("--prices", default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("verify", help="run the accounting property suite")
    p.add_argument("--seeds", type=int, default=20)
    p.add_argument("--transactions", default="200,400")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return exc.exit_code
    except (ConfigError, ProfileError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return EXIT_INVALID
    except SimulationError as exc:
        print(json.dumps({"error": exc.report}), file=sys.stderr)
        return EXIT_SIMULATION
    except Exception as exc:  # noqa: BLE001 - final CLI guard
        print(json.dumps({"error": f"{type(exc).__name__}: {exc}"}),
              file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
