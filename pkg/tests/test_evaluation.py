import json

import pytest

from ledgerbench.core import CompanyKind, builtin_profile
from ledgerbench.evaluation import (
    EndpointConfig,
    MOCK_ECHO,
    MOCK_GARBAGE,
    PriceTable,
    TransportError,
    aggregate,
    canonical_value,
    complete,
    completed_task_ids,
    extract_solution,
    leaderboard_row,
    load_results,
    report_csv,
    run_eval,
    score,
)
from ledgerbench.simulation import SimulationConfig
from ledgerbench.suite import build_bundle, load_bundle, write_bundle


@pytest.fixture(scope="module")
def bundle_dir(tmp_path_factory):
    outdir = tmp_path_factory.mktemp("bundle") / "b"
    bundle = build_bundle(builtin_profile(CompanyKind.TYPE_IV),
                          SimulationConfig(seed=31, target_transactions=150))
    write_bundle(bundle, outdir)
    return outdir


# --- answer extraction --------------------------------------------------------

def test_extract_solution_from_fenced_block():
    raw = ('Reasoning first...\n```json\n'
           '{"solution": {"Return on Assets (ROA)": "-9.55%"}}\n```')
    assert extract_solution(raw) == {"Return on Assets (ROA)": "-9.55%"}


def test_extract_solution_prefers_fenced_over_narrative():
    # Narrative says 5,082,632.85 but the structured block says otherwise;
    # the fenced block wins.
    raw = ("the ending balance is 20,000,000.0 - 14,917,367.15 = "
           "5,082,632.85 ... Below is our answer in the required JSON "
           'format: ```json\n{"solution":{"Ending Balance":"5072632.85"}}\n'
           "```. That is the final ending cash balance.")
    assert extract_solution(raw) == {"Ending Balance": "5072632.85"}


def test_extract_solution_takes_last_block_with_solution():
    raw = ('```json\n{"solution": {"X": "1.00"}}\n```\n'
           'wait, correcting myself:\n'
           '```json\n{"solution": {"X": "2.00"}}\n```')
    assert extract_solution(raw) == {"X": "2.00"}


def test_extract_solution_scalar_and_failures():
    assert extract_solution('```json\n{"solution": "434651.47"}\n```') == \
        "434651.47"
    assert extract_solution("no block here") is None
    assert extract_solution("```json\nnot json\n```") is None
    assert extract_solution('```json\n{"answer": 1}\n```') is None
    assert extract_solution("") is None


# --- canonicalization and scoring ----------------------------------------------

def test_rounding_case_scored_incorrect():
    per_field, correct = score({"Return on Assets (ROA)": "-9.55%"},
                               ["Return on Assets (ROA)"],
                               {"Return on Assets (ROA)": "-9.56%"})
    assert per_field == {"Return on Assets (ROA)": False}
    assert not correct


def test_exact_match_correct():
    per_field, correct = score({"Ending Balance": "434651.47"},
                               ["Ending Balance"],
                               {"Ending Balance": "434651.47"})
    assert correct


@pytest.mark.parametrize("answer", [
    "434651.4700", "434,651.47", " 434651.47 ", "$434651.47", 434651.47,
])
def test_canonicalization_equivalences(answer):
    _, correct = score({"Ending Balance": answer}, ["Ending Balance"],
                       {"Ending Balance": "434651.47"})
    assert correct


def test_parenthesized_negative_canonicalizes():
    assert canonical_value("(7565348.53)") == canonical_value("-7565348.53")
    _, correct = score({"Net Increase": "(7565348.53)"}, ["Net Increase"],
                       {"Net Increase": "-7565348.53"})
    assert correct


def test_half_up_rounding_applies_to_both_sides():
    _, correct = score({"ROA": "-9.555%"}, ["ROA"], {"ROA": "-9.56%"})
    assert correct


def test_percent_sign_required_when_truth_has_one():
    _, correct = score({"ROA": "-9.56"}, ["ROA"], {"ROA": "-9.56%"})
    assert not correct
    _, correct = score({"Ratio": "4.27%"}, ["Ratio"], {"Ratio": "4.27"})
    assert not correct


def test_enum_fields_match_case_insensitively():
    _, correct = score({"Recorded Type": " purchase "}, ["Recorded Type"],
                       {"Recorded Type": "Purchase"})
    assert correct


def test_keys_match_case_insensitively_extra_ignored_missing_wrong():
    schema = ["Initial Value", "Final Value"]
    truth = {"Initial Value": "1.00", "Final Value": "2.00"}
    per_field, correct = score(
        {"initial value": "1.00", "FINAL VALUE": "2.00", "Extra": "9"},
        schema, truth)
    assert correct
    per_field, correct = score({"Initial Value": "1.00"}, schema, truth)
    assert per_field["Final Value"] is False
    assert not correct


def test_scalar_solution_scored_against_single_field():
    _, correct = score("434651.47", ["Value"], {"Value": "434651.47"})
    assert correct
    _, correct = score("434651.47", ["A", "B"], {"A": "1", "B": "2"})
    assert not correct


def test_nested_statement_scoring():
    truth = {"Income Statement": {"Total Revenue": "100.00",
                                  "Net Profit": "-5.00"}}
    good = {"Income Statement": {"total revenue": "100", "Net Profit": "-5"}}
    _, correct = score(good, ["Income Statement"], truth)
    assert correct
    bad = {"Income Statement": {"Total Revenue": "100.00"}}
    _, correct = score(bad, ["Income Statement"], truth)
    assert not correct


def test_parse_failure_scores_incorrect():
    per_field, correct = score(None, ["Value"], {"Value": "1.00"})
    assert not correct
    assert per_field == {"Value": False}


# --- completion transport --------------------------------------------------------

def _endpoint(retries=2):
    return EndpointConfig(base_url="https://example.test/v1/chat/completions",
                          model_name="test-model", retries=retries)


def test_complete_happy_path_uses_reported_usage():
    def transport(endpoint, prompt):
        return {"choices": [{"message": {"content": "hi there"}}],
                "usage": {"prompt_tokens": 11, "completion_tokens": 7}}
    result = complete("prompt", _endpoint(), transport=transport,
                      backoff_base=0)
    assert (result.text, result.prompt_tokens, result.completion_tokens,
            result.attempts) == ("hi there", 11, 7, 1)


def test_complete_usage_fallback_counts_whitespace_tokens():
    def transport(endpoint, prompt):
        return {"choices": [{"message": {"content": "alpha beta gamma"}}]}
    result = complete("one two", _endpoint(), transport=transport,
                      backoff_base=0)
    assert result.prompt_tokens == 2
    assert result.completion_tokens == 3


def test_complete_retry_contract_exactly_three_attempts():
    calls = []

    def transport(endpoint, prompt):
        calls.append(1)
        raise TransportError("timeout")

    sleeps = []
    with pytest.raises(TransportError):
        complete("p", _endpoint(retries=2), transport=transport,
                 backoff_base=1.0, sleep=sleeps.append)
    assert len(calls) == 3
    assert sleeps == [1.0, 2.0]  # exponential backoff between attempts


def test_complete_recovers_after_transient_failure():
    state = {"n": 0}

    def transport(endpoint, prompt):
        state["n"] += 1
        if state["n"] < 3:
            raise TransportError("boom")
        return {"choices": [{"message": {"content": "ok"}}]}

    result = complete("p", _endpoint(retries=2), transport=transport,
                      backoff_base=0)
    assert result.attempts == 3
    assert result.text == "ok"


# --- evaluation runs ---------------------------------------------------------------

def test_mock_echo_scores_100(bundle_dir, tmp_path):
    bundle = load_bundle(bundle_dir)
    results = run_eval(bundle, EndpointConfig(base_url=MOCK_ECHO,
                                              model_name="mock-echo"),
                       tmp_path / "results.jsonl")
    assert len(results) == 183
    assert all(r.task_correct for r in results)
    report = aggregate(results, bundle.tasks)
    assert report["overall"]["accuracy"] == 1.0
    for stats in report["by_domain"].values():
        assert stats["accuracy"] == 1.0


def test_mock_garbage_scores_0_without_crashing(bundle_dir, tmp_path):
    bundle = load_bundle(bundle_dir)
    results = run_eval(bundle, EndpointConfig(base_url=MOCK_GARBAGE,
                                              model_name="mock-garbage"),
                       tmp_path / "results.jsonl")
    assert len(results) == 183
    assert all(not r.task_correct for r in results)
    assert all(r.parsed_solution is None for r in results)
    report = aggregate(results, bundle.tasks)
    assert report["overall"]["accuracy"] == 0.0
    assert report["missing_task_ids"] == []


def test_resume_skips_completed_tasks(bundle_dir, tmp_path):
    bundle = load_bundle(bundle_dir)
    results_path = tmp_path / "results.jsonl"
    endpoint = EndpointConfig(base_url=MOCK_ECHO, model_name="mock-echo")
    run_eval(bundle, endpoint, results_path)
    lines = results_path.read_text().splitlines()
    assert len(lines) == 183
    # Simulate a crash after 100 tasks, then resume.
    results_path.write_text("\n".join(lines[:100]) + "\n")
    resumed = run_eval(bundle, endpoint, results_path)
    assert len(resumed) == 83
    final = results_path.read_text().splitlines()
    assert len(final) == 183
    assert final[:100] == lines[:100]
    assert len(completed_task_ids(results_path)) == 183


def test_results_file_round_trip(bundle_dir, tmp_path):
    bundle = load_bundle(bundle_dir)
    results_path = tmp_path / "results.jsonl"
    results = run_eval(bundle, EndpointConfig(base_url=MOCK_ECHO,
                                              model_name="mock-echo"),
                       results_path)
    loaded = load_results(results_path)
    assert [r.to_dict() for r in loaded] == [r.to_dict() for r in results]


def test_aggregate_recomputes_bucket_accuracy(bundle_dir, tmp_path):
    bundle = load_bundle(bundle_dir)
    results = run_eval(bundle, EndpointConfig(base_url=MOCK_ECHO,
                                              model_name="mock-echo"),
                       tmp_path / "results.jsonl")
    report = aggregate(results, bundle.tasks)
    for bucket, stats in report["by_complexity"].items():
        members = [r for r in results if r.complexity == bucket]
        assert stats["tasks"] == len(members)
        recomputed = sum(1 for r in members if r.task_correct) / len(members)
        assert stats["accuracy"] == recomputed
    csv_text = report_csv(report)
    assert csv_text.splitlines()[0].startswith("section,bucket")
    assert "overall,all,183" in csv_text
    assert "mock-echo" in leaderboard_row(report)


def test_aggregate_lists_missing_results(bundle_dir, tmp_path):
    bundle = load_bundle(bundle_dir)
    results = run_eval(bundle, EndpointConfig(base_url=MOCK_ECHO,
                                              model_name="mock-echo"),
                       tmp_path / "results.jsonl")
    report = aggregate(results[:-3], bundle.tasks)
    assert len(report["missing_task_ids"]) == 3


def test_transport_failures_recorded_and_excludable(bundle_dir, tmp_path):
    bundle = load_bundle(bundle_dir)
    endpoint = EndpointConfig(base_url="https://down.example/v1",
                              model_name="down-model", retries=0,
                              max_parallel=1)
    calls = {"n": 0}

    def transport(ep, prompt):
        calls["n"] += 1
        if calls["n"] <= 2:
            raise TransportError("connection refused")
        return {"choices": [{"message": {"content": "no block"}}]}

    results = run_eval(bundle, endpoint, tmp_path / "r.jsonl",
                       transport=transport, backoff_base=0)
    assert len(results) == 183  # failures recorded, never dropped
    failed = [r for r in results if r.transport_failed]
    assert len(failed) == 2
    assert all(not r.task_correct for r in failed)
    default = aggregate(results, bundle.tasks)
    assert default["overall"]["tasks"] == 183
    assert default["transport_failures"] == 2
    excluded = aggregate(results, bundle.tasks,
                         exclude_transport_failures=True)
    assert excluded["overall"]["tasks"] == 181
    assert excluded["transport_failures"] == 2


def test_price_table_cost_example(tmp_path):
    prices_path = tmp_path / "prices.json"
    prices_path.write_text(json.dumps({
        "gpt-4o-mini": {"prompt_price": 0.15, "completion_price": 0.60}}))
    table = PriceTable.load(prices_path)
    # 1M prompt + 1M completion tokens at 0.15/0.60 per MTok -> 0.75
    assert table.cost("gpt-4o-mini", 1_000_000, 1_000_000) == pytest.approx(0.75)
    assert table.cost("unknown-model", 10, 10) is None


def test_price_table_rejects_negative(tmp_path):
    prices_path = tmp_path / "prices.json"
    prices_path.write_text(json.dumps({
        "m": {"prompt_price": -1, "completion_price": 0.5}}))
    with pytest.raises(ValueError):
        PriceTable.load(prices_path)


def test_endpoint_config_validation():
    with pytest.raises(ValueError):
        EndpointConfig(base_url="x", model_name="m", max_parallel=0)
    with pytest.raises(ValueError):
        EndpointConfig(base_url="x", model_name="m", timeout=0)


def test_http_transport_against_local_server(monkeypatch):
    import json as _json
    import threading
    from http.server import BaseHTTPRequestHandler, HTTPServer

    seen = {}

    class Handler(BaseHTTPRequestHandler):
        def do_POST(self):
            body = self.rfile.read(int(self.headers["Content-Length"]))
            seen["payload"] = _json.loads(body)
            seen["auth"] = self.headers.get("Authorization")
            reply = {"choices": [{"message": {"content":
                     '```json\n{"solution": "1.00"}\n```'}}],
                     "usage": {"prompt_tokens": 4, "completion_tokens": 9}}
            data = _json.dumps(reply).encode()
            self.send_response(200)
            self.send_header("Content-Type", "application/json")
            self.send_header("Content-Length", str(len(data)))
            self.end_headers()
            self.wfile.write(data)

        def log_message(self, *args):
            pass

    server = HTTPServer(("127.0.0.1", 0), Handler)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    try:
        monkeypatch.setenv("LEDGERBENCH_API_KEY", "secret-token")
        endpoint = EndpointConfig(
            base_url=f"http://127.0.0.1:{server.server_port}/v1/chat",
            model_name="local-test", temperature=0.0, max_parallel=1)
        result = complete("what is 1?", endpoint)
        assert result.prompt_tokens == 4
        assert result.completion_tokens == 9
        assert extract_solution(result.text) == "1.00"
        assert seen["auth"] == "Bearer secret-token"
        assert seen["payload"]["model"] == "local-test"
        assert seen["payload"]["messages"] == [
            {"role": "user", "content": "what is 1?"}]
        assert seen["payload"]["temperature"] == 0.0
    finally:
        server.shutdown()


def test_http_transport_requires_credential(monkeypatch):
    monkeypatch.delenv("LEDGERBENCH_API_KEY", raising=False)
    endpoint = EndpointConfig(base_url="http://127.0.0.1:1/v1",
                              model_name="m", retries=0)
    with pytest.raises(TransportError, match="LEDGERBENCH_API_KEY"):
        complete("p", endpoint, backoff_base=0)
