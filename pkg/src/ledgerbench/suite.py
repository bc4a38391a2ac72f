"""Materialize the 183-task bundle: prompts, attachments, and exact solutions.

A bundle pairs one simulated company (the problem case) with a second,
independently seeded company whose artifacts appear only inside the worked
example of each prompt, so the example never leaks the answer. Audit tasks
each get their own corrupted copy of the journal, produced by a sub-seeded
injection plan.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Optional

from . import statements as st
from .audit import ErrorManifest, InjectionPlan, inject, render_corpus
from .catalog import (
    CATALOG,
    CATALOG_NOTES,
    AccountingSpec,
    AuditSpec,
    CatalogRow,
    ConsultingSpec,
    Domain,
    EXPECTED_COUNTS,
    InputDoc,
    LiteracySpec,
    catalog_rows,
)
from .core import CompanyKind, CompanyProfile
from .indicators import UndefinedIndicatorError, compute
from .simulation import (
    Journal,
    SimulationConfig,
    derive_seed,
    dumps_journal,
    simulate,
)

Solution = dict  # field name -> display string (or nested map for statements)


class BundleError(RuntimeError):
    """The bundle cannot satisfy the catalog contract."""


@dataclass(frozen=True)
class Complexity:
    alpha: int
    beta: int
    gamma: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.alpha, self.beta, self.gamma)

    def __str__(self) -> str:
        return f"[{self.alpha},{self.beta},{self.gamma}]"


@dataclass(frozen=True)
class TaskSpec:
    task_id: str
    domain: Domain
    name: str
    display_name: str
    complexity: Complexity
    inputs: tuple[InputDoc, ...]
    description: str
    solution_schema: tuple[str, ...]
    ground_truth: Solution

    def to_public_dict(self) -> dict:
        return {
            "task_id": self.task_id,
            "domain": self.domain.value,
            "name": self.name,
            "display_name": self.display_name,
            "alpha": self.complexity.alpha,
            "beta": self.complexity.beta,
            "gamma": self.complexity.gamma,
            "inputs": [doc.value for doc in self.inputs],
            "description": self.description,
            "solution_schema": list(self.solution_schema),
        }


@dataclass
class CaseData:
    """One simulated company with everything the tasks reference."""

    journal: Journal
    statements: st.StatementSet
    corrupted: dict[str, Journal]
    manifests: dict[str, ErrorManifest]


@dataclass
class TaskBundle:
    company: CompanyKind
    seed: int
    tasks: list[TaskSpec]
    case: CaseData
    example_case: CaseData
    example_solutions: dict[str, Solution]

    def task(self, task_id: str) -> TaskSpec:
        for task in self.tasks:
            if task.task_id == task_id:
                return task
        raise KeyError(task_id)


def prepare_case(profile: CompanyProfile, config: SimulationConfig) -> CaseData:
    """Simulate, compile, and build every audit task's corrupted journal."""
    journal = simulate(profile, config)
    compiled = st.compile(journal)
    corrupted: dict[str, Journal] = {}
    manifests: dict[str, ErrorManifest] = {}
    failures = []
    for row in catalog_rows(Domain.AUDITING):
        plan = InjectionPlan(
            specs=tuple((kind, 1) for kind in row.spec.kinds),
            seed=derive_seed(config.seed, f"audit:{row.task_id}"),
            colocate=True)
        try:
            corrupted[row.task_id], manifests[row.task_id] = inject(journal, plan)
        except ValueError as exc:
            failures.append(f"{row.task_id} ({row.name}): {exc}")
    if failures:
        raise BundleError(
            "infeasible audit tasks, bundle rejected: " + "; ".join(failures))
    return CaseData(journal=journal, statements=compiled,
                    corrupted=corrupted, manifests=manifests)


# --- ground-truth extraction ------------------------------------------------------

def _line_money(compiled: st.StatementSet, ref: tuple[str, str],
                column: str = "end"):
    statement, field = ref
    if statement == "bs":
        col = getattr(compiled.balance_sheet, "initial" if column == "initial" else "end")
        return getattr(col, field)
    if statement == "is":
        return getattr(compiled.income_statement, field)
    return getattr(compiled.cash_flow_statement, field)


def _line_display(compiled, ref, column="end") -> str:
    return str(_line_money(compiled, ref, column))


def _whole_statement(compiled: st.StatementSet, which: str,
                     column: Optional[str] = None) -> dict:
    if which == "bs":
        col = getattr(compiled.balance_sheet, column)
        return {label: str(getattr(col, attr))
                for label, attr, _ in st.BALANCE_SHEET_LINES}
    if which == "is":
        return {label: str(getattr(compiled.income_statement, attr))
                for label, attr, _ in st.INCOME_STATEMENT_LINES}
    return {label: str(getattr(compiled.cash_flow_statement, attr))
            for label, attr, _ in st.CASH_FLOW_LINES}


def _literacy_solution(row: CatalogRow, case: CaseData) -> Solution:
    spec: LiteracySpec = row.spec
    compiled = case.statements
    schema = row.solution_schema()
    values: list[str] = []
    if spec.mode == "single":
        ref = spec.items[0]
        if row.gamma == 2:
            values = [_line_display(compiled, ref, "initial"),
                      _line_display(compiled, ref, "end")]
        else:
            values = [_line_display(compiled, ref)]
    elif spec.mode == "multi":
        values = [_line_display(compiled, ref) for ref in spec.items]
    else:  # decompose
        if spec.main[0] == "bs":
            values = [_line_display(compiled, spec.main, "end")]
            for sub in spec.subs:
                values.append(_line_display(compiled, sub, "initial"))
                values.append(_line_display(compiled, sub, "end"))
        else:
            values = [_line_display(compiled, spec.main)]
            values.extend(_line_display(compiled, sub) for sub in spec.subs)
    return dict(zip(schema, values))


def _accounting_solution(row: CatalogRow, case: CaseData) -> Solution:
    spec: AccountingSpec = row.spec
    compiled = case.statements
    schema = row.solution_schema()
    if spec.whole:
        if spec.whole == "bs":
            return {schema[0]: _whole_statement(compiled, "bs", "initial"),
                    schema[1]: _whole_statement(compiled, "bs", "end")}
        return {schema[0]: _whole_statement(compiled, spec.whole)}
    if spec.ref[0] == "bs":
        return {schema[0]: _line_display(compiled, spec.ref, "initial"),
                schema[1]: _line_display(compiled, spec.ref, "end")}
    return {schema[0]: _line_display(compiled, spec.ref)}


def _audit_solution(row: CatalogRow, case: CaseData) -> Solution:
    spec: AuditSpec = row.spec
    manifest = case.manifests[row.task_id]
    by_field = {entry.field_name: entry for entry in manifest.entries}
    txn_id = manifest.entries[0].transaction_id
    original = next(t for t in case.journal.transactions if t.id == txn_id)
    corrupted = next(t for t in case.corrupted[row.task_id].transactions
                     if t.id == txn_id)
    solution: Solution = {}
    for sf in spec.schema:
        if sf.source == "id":
            solution[sf.label] = txn_id
        elif sf.source == "recorded":
            solution[sf.label] = by_field[sf.field].recorded_value
        elif sf.source == "original":
            solution[sf.label] = by_field[sf.field].original_value
        elif sf.source == "ctx_recorded":
            solution[sf.label] = corrupted.to_record()[sf.field]
        else:  # ctx_original
            solution[sf.label] = original.to_record()[sf.field]
    return solution


def _consulting_solution(row: CatalogRow, case: CaseData) -> Solution:
    spec: ConsultingSpec = row.spec
    solution: Solution = {}
    for key, indicator in spec.outputs:
        try:
            solution[key] = compute(indicator, case.statements).display
        except UndefinedIndicatorError:
            solution[key] = "N/A"
    return solution


def ground_truth(row: CatalogRow, case: CaseData) -> Solution:
    if isinstance(row.spec, LiteracySpec):
        return _literacy_solution(row, case)
    if isinstance(row.spec, AccountingSpec):
        return _accounting_solution(row, case)
    if isinstance(row.spec, AuditSpec):
        return _audit_solution(row, case)
    return _consulting_solution(row, case)


# --- prompt rendering -------------------------------------------------------------

def _documents(row_inputs, row_id, case: CaseData) -> list[tuple[str, str]]:
    docs = []
    for doc in row_inputs:
        if doc is InputDoc.BALANCE_SHEET:
            docs.append(("Balance Sheet",
                         st.render_balance_sheet(case.statements.balance_sheet)))
        elif doc is InputDoc.INCOME_STATEMENT:
            docs.append(("Income Statement",
                         st.render_income_statement(case.statements.income_statement)))
        elif doc is InputDoc.CASH_FLOW_STATEMENT:
            docs.append(("Cash Flow Statement",
                         st.render_cash_flow_statement(case.statements.cash_flow_statement)))
        elif doc is InputDoc.JOURNAL_TEXT:
            docs.append(("Transaction Records", render_corpus(case.journal)))
        else:
            docs.append(("Transaction Records",
                         render_corpus(case.corrupted[row_id])))
    return docs


def _problem_text(task: TaskSpec, case: CaseData) -> str:
    parts = [task.description, "", "Input Documents:"]
    for title, text in _documents(task.inputs, task.task_id, case):
        parts.append("")
        parts.append(f"## {title}")
        parts.append(text.rstrip("\n"))
    return "\n".join(parts)


def _json_line(key: str, value) -> str:
    return json.dumps({key: value}, ensure_ascii=False)


PROMPT_INSTRUCTION = (
    "Now please solve the above task. Reason step by step and present your "
    "answer in the \"solution\" field in the following json format:\n"
    "```json\n{\"solution\": \"___\" }\n```")


def render_prompt(task: TaskSpec, bundle: TaskBundle) -> str:
    """Instantiate the prompt template for one task (pure; renders identically)."""
    example_problem = _problem_text(task, bundle.example_case)
    example_solution = bundle.example_solutions[task.task_id]
    problem = _problem_text(task, bundle.case)
    return (
        f"# {task.display_name} Task Description:\n"
        f"{task.description}\n"
        "\n"
        "# Examples:\n"
        f"{_json_line('problem', example_problem)}\n"
        f"{_json_line('solution', example_solution)}\n"
        "# Problem to Solve: \n"
        f"{_json_line('problem', problem)}\n"
        "\n"
        "# Instruction:\n"
        f"{PROMPT_INSTRUCTION}\n")


# --- bundle construction ----------------------------------------------------------

def build_catalog(case: CaseData, example_case: CaseData,
                  company: CompanyKind, seed: int) -> TaskBundle:
    """Assemble all 183 tasks with ground truths from one problem case."""
    tasks: list[TaskSpec] = []
    example_solutions: dict[str, Solution] = {}
    for row in CATALOG:
        task = TaskSpec(
            task_id=row.task_id, domain=row.domain, name=row.name,
            display_name=row.display_name,
            complexity=Complexity(row.alpha, row.beta, row.gamma),
            inputs=row.inputs, description=row.description,
            solution_schema=row.solution_schema(),
            ground_truth=ground_truth(row, case))
        if len(task.solution_schema) != row.gamma:
            raise BundleError(f"{row.task_id}: schema arity != gamma")
        if list(task.ground_truth) != list(task.solution_schema):
            raise BundleError(f"{row.task_id}: ground truth keys != schema")
        tasks.append(task)
        example_solutions[row.task_id] = ground_truth(row, example_case)
    counts = {domain: sum(1 for t in tasks if t.domain is domain)
              for domain in EXPECTED_COUNTS}
    if counts != EXPECTED_COUNTS or len(tasks) != 183:
        raise BundleError(f"catalog counts off: {counts}")
    return TaskBundle(company=company, seed=seed, tasks=tasks, case=case,
                      example_case=example_case,
                      example_solutions=example_solutions)


def build_bundle(profile: CompanyProfile, config: SimulationConfig,
                 example_seed: Optional[int] = None) -> TaskBundle:
    """End-to-end convenience: simulate both cases and build the bundle."""
    case = prepare_case(profile, config)
    if example_seed is None:
        example_seed = derive_seed(config.seed, "example")
    example_case = prepare_case(profile, replace(config, seed=example_seed))
    return build_catalog(case, example_case, profile.kind, config.seed)


# --- bundle on disk ---------------------------------------------------------------

def write_bundle(bundle: TaskBundle, outdir: str | Path) -> None:
    out = Path(outdir)
    (out / "prompts").mkdir(parents=True, exist_ok=True)
    attachments = out / "attachments"
    (attachments / "corrupted").mkdir(parents=True, exist_ok=True)

    tasks_doc = [task.to_public_dict() for task in bundle.tasks]
    _write_json(out / "tasks.json", tasks_doc)
    _write_json(out / "ground_truth.json",
                {task.task_id: task.ground_truth for task in bundle.tasks})
    _write_json(out / "catalog_manifest.json", {
        "company": bundle.company.value,
        "seed": bundle.seed,
        "counts": {d.value: n for d, n in EXPECTED_COUNTS.items()},
        "notes": CATALOG_NOTES,
    })
    for task in bundle.tasks:
        (out / "prompts" / f"{task.task_id}.txt").write_text(
            render_prompt(task, bundle), encoding="utf-8")

    case = bundle.case
    (attachments / "journal.jsonl").write_text(
        dumps_journal(case.journal), encoding="utf-8")
    (attachments / "journal_invoices.txt").write_text(
        render_corpus(case.journal), encoding="utf-8")
    (attachments / "statements.json").write_text(
        st.render(case.statements, "structured"), encoding="utf-8")
    (attachments / "statements.txt").write_text(
        st.render(case.statements, "text-table"), encoding="utf-8")
    for task_id, journal in sorted(case.corrupted.items()):
        (attachments / "corrupted" / f"{task_id}.jsonl").write_text(
            dumps_journal(journal), encoding="utf-8")
        (attachments / "corrupted" / f"{task_id}.txt").write_text(
            render_corpus(journal), encoding="utf-8")
    _write_json(attachments / "manifests.json",
                {task_id: manifest.to_dict()
                 for task_id, manifest in sorted(case.manifests.items())})


def _write_json(path: Path, doc) -> None:
    path.write_text(json.dumps(doc, indent=2, ensure_ascii=False) + "\n",
                    encoding="utf-8")


@dataclass
class BundleOnDisk:
    """The model-facing view eval needs: metadata, prompts, ground truth."""

    root: Path
    tasks: list[dict]
    ground_truth: dict[str, Solution]
    company: str
    seed: int

    def prompt(self, task_id: str) -> str:
        return (self.root / "prompts" / f"{task_id}.txt").read_text(
            encoding="utf-8")


def load_bundle(bundle_dir: str | Path) -> BundleOnDisk:
    root = Path(bundle_dir)
    tasks = json.loads((root / "tasks.json").read_text(encoding="utf-8"))
    truth = json.loads((root / "ground_truth.json").read_text(encoding="utf-8"))
    manifest = json.loads(
        (root / "catalog_manifest.json").read_text(encoding="utf-8"))
    return BundleOnDisk(root=root, tasks=tasks, ground_truth=truth,
                        company=manifest["company"], seed=manifest["seed"])
