import json

import pytest

from ledgerbench.catalog import (
    CATALOG,
    Domain,
    EXPECTED_COUNTS,
    InputDoc,
    LiteracySpec,
    catalog_rows,
)
from ledgerbench.core import CompanyKind, builtin_profile
from ledgerbench.evaluation import score
from ledgerbench.simulation import SimulationConfig
from ledgerbench.suite import (
    build_bundle,
    load_bundle,
    render_prompt,
    write_bundle,
)


@pytest.fixture(scope="module")
def bundle():
    return build_bundle(builtin_profile(CompanyKind.TYPE_II),
                        SimulationConfig(seed=7, target_transactions=200))


def test_catalog_is_183_split_64_49_35_35():
    assert len(CATALOG) == 183
    for domain, expected in EXPECTED_COUNTS.items():
        assert len(catalog_rows(domain)) == expected


def test_catalog_task_ids_unique_and_stable():
    ids = [row.task_id for row in CATALOG]
    assert len(set(ids)) == 183
    assert ids[0] == "lit-001"
    assert [r.task_id for r in catalog_rows(Domain.AUDITING)][0] == "aud-001"


def test_every_task_schema_matches_gamma_and_inputs_match_beta(bundle):
    for task in bundle.tasks:
        assert len(task.solution_schema) == task.complexity.gamma, task.task_id
        assert len(task.inputs) == task.complexity.beta, task.task_id
        assert list(task.ground_truth) == list(task.solution_schema)


def test_prompt_contains_template_headers(bundle):
    prompt = render_prompt(bundle.tasks[0], bundle)
    examples = prompt.index("# Examples:")
    problem = prompt.index("# Problem to Solve:")
    instruction = prompt.index("# Instruction:")
    assert examples < problem < instruction
    assert "Reason step by step and present your answer" in prompt
    assert '"solution"' in prompt


def test_prompt_rendering_is_pure(bundle):
    task = bundle.task("con-011")
    assert render_prompt(task, bundle) == render_prompt(task, bundle)


def test_literacy_definition_present_and_term_absent(bundle):
    rows = {row.task_id: row for row in catalog_rows(Domain.FINANCIAL_LITERACY)}
    cash_task = bundle.task("lit-001")
    assert ("cash held by an entity that is available for use in its "
            "day-to-day operations") in cash_task.description
    for task in bundle.tasks:
        if task.domain is not Domain.FINANCIAL_LITERACY:
            continue
        row = rows[task.task_id]
        body = task.description.casefold()
        for term in row.forbidden_terms:
            assert term.casefold() not in body, (task.task_id, term)
        # The heading never names the item either.
        assert task.display_name == "Financial Literacy Detection"


def test_literacy_decomposition_values_articulate(bundle):
    # Net increase decomposes into operating + investing flows.
    task = bundle.task(next(
        r.task_id for r in catalog_rows(Domain.FINANCIAL_LITERACY)
        if isinstance(r.spec, LiteracySpec) and r.spec.mode == "decompose"
        and r.spec.main == ("cfs", "net_increase")))
    truth = task.ground_truth
    main = float(truth["Main Item"])
    subs = [float(truth[k]) for k in truth if k.startswith("Sub-item")]
    assert abs(main - sum(subs)) < 0.011


def test_audit_ground_truth_matches_manifest(bundle):
    task = bundle.task("aud-005")  # single QUANTITY record error
    manifest = bundle.case.manifests["aud-005"]
    [entry] = manifest.entries
    assert task.ground_truth["ID"] == entry.transaction_id
    assert task.ground_truth["Recorded Quantity"] == entry.recorded_value
    assert task.ground_truth["Original Quantity"] == entry.original_value


def test_audit_prompts_embed_corrupted_corpus(bundle):
    task = bundle.task("aud-001")
    prompt = render_prompt(task, bundle)
    truth = task.ground_truth
    assert truth["ID"] in prompt
    corrupted = bundle.case.corrupted["aud-001"]
    target = next(t for t in corrupted.transactions
                  if t.id == truth["ID"])
    from ledgerbench.audit import render_invoice
    assert render_invoice(target) in prompt


def test_accounting_whole_statement_truth_is_nested(bundle):
    task = bundle.task(next(
        t.task_id for t in bundle.tasks
        if t.name == "Balance Sheet-Balance Sheet"))
    initial = task.ground_truth["Balance Sheet (Initial)"]
    assert isinstance(initial, dict)
    assert initial["Cash on Hand"] == "3000000.00"
    assert list(initial)[0] == "Cash on Hand"


def test_consulting_truth_uses_display_convention(bundle):
    roa = bundle.task("con-011").ground_truth["Return on Assets (ROA)"]
    assert roa.endswith("%")


def test_example_never_leaks_problem_answer(bundle):
    # The worked example comes from an independently seeded journal.
    # Coarse values (fixed monthly depreciation, payables quantized to one
    # purchase price) may coincide, but fine-grained answers must differ.
    assert bundle.example_case.journal.digest() != bundle.case.journal.digest()
    differing = sum(
        1 for task in bundle.tasks
        if bundle.example_solutions[task.task_id] != task.ground_truth)
    assert differing >= 140
    for task in bundle.tasks:
        if task.domain is Domain.AUDITING:
            assert bundle.example_solutions[task.task_id] != task.ground_truth


def test_oracle_self_consistency_scores_100(bundle):
    for task in bundle.tasks:
        per_field, correct = score(task.ground_truth, task.solution_schema,
                                   task.ground_truth)
        assert correct, task.task_id


def test_bundle_build_is_deterministic(bundle):
    again = build_bundle(builtin_profile(CompanyKind.TYPE_II),
                         SimulationConfig(seed=7, target_transactions=200))
    for first, second in zip(bundle.tasks, again.tasks):
        assert first == second
    assert {k: v for k, v in bundle.example_solutions.items()} == \
        {k: v for k, v in again.example_solutions.items()}


def test_bundle_round_trip_on_disk(tmp_path, bundle):
    outdir = tmp_path / "bundle"
    write_bundle(bundle, outdir)
    loaded = load_bundle(outdir)
    assert len(loaded.tasks) == 183
    assert loaded.company == "TypeII"
    assert loaded.seed == 7
    assert set(loaded.ground_truth) == {t.task_id for t in bundle.tasks}
    prompt = loaded.prompt("lit-001")
    assert prompt == render_prompt(bundle.task("lit-001"), bundle)
    manifest = json.loads(
        (outdir / "catalog_manifest.json").read_text(encoding="utf-8"))
    assert manifest["counts"]["Accounting"] == 49
    assert "notes" in manifest


def test_bundle_rejected_when_audit_tasks_infeasible():
    # A journal this small cannot host every audit variant; the counts are
    # contractual, so the whole bundle is refused.
    from ledgerbench.suite import BundleError, prepare_case
    with pytest.raises(BundleError, match="infeasible audit tasks"):
        prepare_case(builtin_profile(CompanyKind.TYPE_II),
                     SimulationConfig(seed=1, target_transactions=2))


def test_inputs_match_declared_documents(bundle):
    for task in bundle.tasks:
        if task.domain is Domain.ACCOUNTING:
            assert task.inputs == (InputDoc.JOURNAL_TEXT,)
        if task.domain is Domain.AUDITING:
            assert task.inputs == (InputDoc.CORRUPTED_JOURNAL_TEXT,)
