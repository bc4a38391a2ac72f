"""Drive model endpoints over a task bundle, parse answers, score, aggregate.

Scoring equality is canonical-display equality: both sides are rounded
half-up to two decimals, a percent sign is required exactly where the
ground truth carries one, and enum/date/id fields compare case-insensitively
after trimming. Results append to a JSON-lines sink so an interrupted run
resumes by skipping already-scored task ids.
"""

from __future__ import annotations

import json
import os
import re
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from pathlib import Path
from typing import Callable, Optional

from .core import round_half_up
from .suite import BundleOnDisk

DEFAULT_CREDENTIAL_ENV = "LEDGERBENCH_API_KEY"

MOCK_ECHO = "mock://echo"
MOCK_GARBAGE = "mock://garbage"


@dataclass(frozen=True)
class EndpointConfig:
    base_url: str
    model_name: str
    credential_env_var: str = DEFAULT_CREDENTIAL_ENV
    max_parallel: int = 2
    timeout: float = 120.0
    retries: int = 2
    temperature: Optional[float] = None

    def __post_init__(self):
        if self.max_parallel < 1:
            raise ValueError("max_parallel must be >= 1")
        if self.timeout <= 0:
            raise ValueError("timeout must be positive")

    @classmethod
    def from_dict(cls, doc: dict) -> "EndpointConfig":
        return cls(
            base_url=doc["base_url"],
            model_name=doc["model_name"],
            credential_env_var=doc.get("credential_env_var",
                                       DEFAULT_CREDENTIAL_ENV),
            max_parallel=int(doc.get("max_parallel", 2)),
            timeout=float(doc.get("timeout", 120.0)),
            retries=int(doc.get("retries", 2)),
            temperature=doc.get("temperature"))

    @classmethod
    def load(cls, path: str | Path) -> "EndpointConfig":
        return cls.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))

    def is_mock(self) -> bool:
        return self.base_url.startswith("mock://")


class TransportError(RuntimeError):
    pass


@dataclass
class Completion:
    text: str
    prompt_tokens: int
    completion_tokens: int
    latency: float
    attempts: int


def _whitespace_tokens(text: str) -> int:
    # Fallback when the endpoint reports no usage block.
    return len(text.split())


def _http_transport(endpoint: EndpointConfig, prompt: str) -> dict:
    try:
        import requests
    except ImportError as exc:  # pragma: no cover - environment dependent
        raise TransportError(
            "evaluating an HTTP endpoint needs the requests package "
            "(pip install 'ledgerbench[http]')") from exc

    key = os.environ.get(endpoint.credential_env_var)
    if not key:
        raise TransportError(
            f"credential env var {endpoint.credential_env_var} is not set")
    payload = {
        "model": endpoint.model_name,
        "messages": [{"role": "user", "content": prompt}],
    }
    if endpoint.temperature is not None:
        payload["temperature"] = endpoint.temperature
    response = requests.post(
        endpoint.base_url, json=payload, timeout=endpoint.timeout,
        headers={"Authorization": f"Bearer {key}",
                 "Content-Type": "application/json"})
    if response.status_code != 200:
        raise TransportError(f"HTTP {response.status_code}: {response.text[:200]}")
    return response.json()


def complete(prompt: str, endpoint: EndpointConfig,
             transport: Optional[Callable[[EndpointConfig, str], dict]] = None,
             backoff_base: float = 1.0,
             sleep: Callable[[float], None] = time.sleep) -> Completion:
    """One chat completion with bounded exponential-backoff retries."""
    transport = transport or _http_transport
    attempts = endpoint.retries + 1
    start = time.perf_counter()
    last_error: Optional[Exception] = None
    for attempt in range(1, attempts + 1):
        try:
            doc = transport(endpoint, prompt)
            text = doc["choices"][0]["message"]["content"]
            usage = doc.get("usage") or {}
            prompt_tokens = usage.get("prompt_tokens")
            completion_tokens = usage.get("completion_tokens")
            if not prompt_tokens:
                prompt_tokens = _whitespace_tokens(prompt)
            if not completion_tokens:
                completion_tokens = _whitespace_tokens(text)
            return Completion(
                text=text, prompt_tokens=int(prompt_tokens),
                completion_tokens=int(completion_tokens),
                latency=time.perf_counter() - start, attempts=attempt)
        except (TransportError, KeyError, IndexError, ValueError,
                OSError) as exc:
            last_error = exc
            if attempt < attempts:
                sleep(backoff_base * (2 ** (attempt - 1)))
    raise TransportError(
        f"exhausted {attempts} attempts: {last_error}") from last_error


# --- structured answer parsing -----------------------------------------------------

_FENCE_RE = re.compile(r"```(?:json)?\s*(.*?)```", re.DOTALL)


def extract_solution(raw_response: str):
    """Pull the solution out of the last fenced block carrying one.

    Returns the value under the top-level "solution" key (a map or a
    scalar), or None when no parsable block exists.
    """
    candidates = _FENCE_RE.findall(raw_response or "")
    for block in reversed(candidates):
        block = block.strip()
        start, end = block.find("{"), block.rfind("}")
        if start < 0 or end <= start:
            continue
        try:
            doc = json.loads(block[start:end + 1])
        except json.JSONDecodeError:
            continue
        if isinstance(doc, dict) and "solution" in doc:
            return doc["solution"]
    return None


# --- canonicalization and scoring ---------------------------------------------------

_NUMERIC_RE = re.compile(
    r"^\(?\s*(-?)\s*\$?\s*([0-9][0-9,]*(?:\.[0-9]+)?)\s*\)?\s*(%?)$")


def canonical_value(value):
    """Reduce a value to its comparison form.

    Numbers (with optional commas, parentheses-negation, currency sign and
    percent suffix) become ("num", cents, has_percent) with cents rounded
    half-up to two decimals; everything else becomes a trimmed, casefolded
    string; maps canonicalize recursively.
    """
    if isinstance(value, dict):
        return {str(k).strip().casefold(): canonical_value(v)
                for k, v in value.items()}
    if isinstance(value, bool):
        return ("str", str(value).casefold())
    if isinstance(value, (int, float)):
        value = repr(value)
    text = str(value).strip()
    match = _NUMERIC_RE.match(text)
    if match:
        sign, digits, percent = match.groups()
        negative = bool(sign) or (text.startswith("(") and text.rstrip("%").rstrip().endswith(")"))
        try:
            number = Decimal(digits.replace(",", ""))
        except InvalidOperation:
            return ("str", text.casefold())
        if negative:
            number = -number
        return ("num", round_half_up(number).cents, bool(percent))
    return ("str", text.casefold())


def _values_match(parsed_value, truth_value) -> bool:
    truth_canon = canonical_value(truth_value)
    parsed_canon = canonical_value(parsed_value)
    if isinstance(truth_canon, dict):
        if not isinstance(parsed_canon, dict):
            return False
        for key, expected in truth_canon.items():
            if key not in parsed_canon:
                return False
            if parsed_canon[key] != expected:
                return False
        return True
    return parsed_canon == truth_canon


def score(parsed, schema: list[str] | tuple[str, ...],
          truth: dict) -> tuple[dict[str, bool], bool]:
    """Per-field correctness map and the all-fields verdict."""
    per_field: dict[str, bool] = {name: False for name in schema}
    if parsed is None:
        return per_field, False
    if not isinstance(parsed, dict):
        if len(schema) == 1:
            per_field[schema[0]] = _values_match(parsed, truth[schema[0]])
        return per_field, all(per_field.values())
    lookup = {str(k).strip().casefold(): v for k, v in parsed.items()}
    for name in schema:
        key = name.strip().casefold()
        if key in lookup:
            per_field[name] = _values_match(lookup[key], truth[name])
    return per_field, all(per_field.values())


# --- evaluation run -----------------------------------------------------------------

@dataclass
class EvalResult:
    task_id: str
    raw_response: str
    parsed_solution: object
    per_field_correct: dict[str, bool]
    task_correct: bool
    prompt_tokens: int
    completion_tokens: int
    latency: float
    attempt: int
    domain: str = ""
    complexity: str = ""
    company: str = ""
    model: str = ""
    transport_failed: bool = False

    def to_dict(self) -> dict:
        return {
            "task_id": self.task_id,
            "raw_response": self.raw_response,
            "parsed_solution": self.parsed_solution,
            "per_field_correct": self.per_field_correct,
            "task_correct": self.task_correct,
            "prompt_tokens": self.prompt_tokens,
            "completion_tokens": self.completion_tokens,
            "latency": self.latency,
            "attempt": self.attempt,
            "domain": self.domain,
            "complexity": self.complexity,
            "company": self.company,
            "model": self.model,
            "transport_failed": self.transport_failed,
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "EvalResult":
        return cls(**doc)


def _mock_response(endpoint: EndpointConfig, task: dict, truth) -> str:
    if endpoint.base_url == MOCK_ECHO:
        solution = json.dumps({"solution": truth}, ensure_ascii=False)
        return (f"Working through {task['name']} step by step using the "
                f"provided documents.\n```json\n{solution}\n```")
    return "model output with no structured answer block"


def completed_task_ids(results_path: str | Path) -> set[str]:
    path = Path(results_path)
    if not path.exists():
        return set()
    done = set()
    for line in path.read_text(encoding="utf-8").splitlines():
        if line.strip():
            done.add(json.loads(line)["task_id"])
    return done


def run_eval(bundle: BundleOnDisk, endpoint: EndpointConfig,
             results_path: str | Path,
             transport: Optional[Callable] = None,
             backoff_base: float = 1.0) -> list[EvalResult]:
    """Evaluate every task in the bundle, resuming past completed task ids."""
    results_path = Path(results_path)
    done = completed_task_ids(results_path)
    todo = [task for task in bundle.tasks if task["task_id"] not in done]
    sink_lock = threading.Lock()
    results: list[EvalResult] = []

    def one(task: dict) -> EvalResult:
        task_id = task["task_id"]
        truth = bundle.ground_truth[task_id]
        prompt = bundle.prompt(task_id)
        transport_failed = False
        attempt = 1
        if endpoint.is_mock():
            text = _mock_response(endpoint, task, truth)
            completion = Completion(
                text=text, prompt_tokens=_whitespace_tokens(prompt),
                completion_tokens=_whitespace_tokens(text), latency=0.0,
                attempts=1)
        else:
            try:
                completion = complete(prompt, endpoint, transport=transport,
                                      backoff_base=backoff_base)
            except TransportError as exc:
                completion = Completion(text=f"[transport failure] {exc}",
                                        prompt_tokens=0, completion_tokens=0,
                                        latency=0.0,
                                        attempts=endpoint.retries + 1)
                transport_failed = True
        attempt = completion.attempts
        parsed = None if transport_failed else extract_solution(completion.text)
        per_field, correct = score(parsed, task["solution_schema"], truth)
        return EvalResult(
            task_id=task_id, raw_response=completion.text,
            parsed_solution=parsed, per_field_correct=per_field,
            task_correct=correct, prompt_tokens=completion.prompt_tokens,
            completion_tokens=completion.completion_tokens,
            latency=completion.latency, attempt=attempt,
            domain=task["domain"],
            complexity=f"[{task['alpha']},{task['beta']},{task['gamma']}]",
            company=bundle.company, model=endpoint.model_name,
            transport_failed=transport_failed)

    results_path.parent.mkdir(parents=True, exist_ok=True)
    with ThreadPoolExecutor(max_workers=endpoint.max_parallel) as pool:
        for result in pool.map(one, todo):
            with sink_lock:
                with results_path.open("a", encoding="utf-8") as sink:
                    sink.write(json.dumps(result.to_dict(),
                                          ensure_ascii=False) + "\n")
            results.append(result)
    return results


def load_results(results_path: str | Path) -> list[EvalResult]:
    lines = Path(results_path).read_text(encoding="utf-8").splitlines()
    return [EvalResult.from_dict(json.loads(line))
            for line in lines if line.strip()]


# --- aggregation --------------------------------------------------------------------

@dataclass(frozen=True)
class PriceTable:
    """Per-model (prompt, completion) prices per million tokens."""

    prices: dict[str, tuple[float, float]]

    @classmethod
    def load(cls, path: str | Path) -> "PriceTable":
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
        prices = {}
        for model, row in doc.items():
            prompt = float(row["prompt_price"])
            completion = float(row["completion_price"])
            if prompt < 0 or completion < 0:
                raise ValueError(f"{model}: prices must be non-negative")
            prices[model] = (prompt, completion)
        return cls(prices)

    def cost(self, model: str, prompt_tokens: int,
             completion_tokens: int) -> Optional[float]:
        if model not in self.prices:
            return None
        prompt_price, completion_price = self.prices[model]
        return (prompt_tokens * prompt_price
                + completion_tokens * completion_price) / 1_000_000


def _bucket_stats(results: list[EvalResult]) -> dict:
    total = len(results)
    correct = sum(1 for r in results if r.task_correct)
    return {
        "tasks": total,
        "correct": correct,
        "accuracy": correct / total if total else None,
        "mean_prompt_tokens": (sum(r.prompt_tokens for r in results) / total
                               if total else None),
        "mean_completion_tokens": (
            sum(r.completion_tokens for r in results) / total
            if total else None),
    }


def aggregate(results: list[EvalResult], tasks: list[dict],
              prices: Optional[PriceTable] = None,
              exclude_transport_failures: bool = False) -> dict:
    """Accuracy by domain, complexity bucket, and company, plus token/cost totals.

    Transport failures count as incorrect by default; with
    ``exclude_transport_failures`` they leave the accuracy denominators
    (they stay visible in the failure counter either way).
    """
    results = sorted(results, key=lambda r: r.task_id)
    by_id = {r.task_id: r for r in results}
    missing = sorted(t["task_id"] for t in tasks if t["task_id"] not in by_id)
    transport_failures = sum(1 for r in results if r.transport_failed)
    if exclude_transport_failures:
        results = [r for r in results if not r.transport_failed]

    def grouped(key_fn):
        groups: dict[str, list[EvalResult]] = {}
        for r in results:
            groups.setdefault(key_fn(r), []).append(r)
        return {key: _bucket_stats(group)
                for key, group in sorted(groups.items())}

    report = {
        "model": results[0].model if results else "",
        "overall": _bucket_stats(results),
        "by_domain": grouped(lambda r: r.domain),
        "by_complexity": grouped(lambda r: r.complexity),
        "by_company": grouped(lambda r: r.company),
        "transport_failures": transport_failures,
        "missing_task_ids": missing,
    }
    if prices is not None and results:
        prompt_tokens = sum(r.prompt_tokens for r in results)
        completion_tokens = sum(r.completion_tokens for r in results)
        report["total_prompt_tokens"] = prompt_tokens
        report["total_completion_tokens"] = completion_tokens
        report["cost"] = prices.cost(results[0].model, prompt_tokens,
                                     completion_tokens)
    return report


def report_csv(report: dict) -> str:
    rows = ["section,bucket,tasks,correct,accuracy,"
            "mean_prompt_tokens,mean_completion_tokens"]

    def emit(section, bucket, stats):
        accuracy = ("" if stats["accuracy"] is None
                    else f"{stats['accuracy']:.4f}")
        rows.append(
            f"{section},{_csv_quote(bucket)},{stats['tasks']},{stats['correct']},"
            f"{accuracy},{_fmt(stats['mean_prompt_tokens'])},"
            f"{_fmt(stats['mean_completion_tokens'])}")

    emit("overall", "all", report["overall"])
    for section in ("by_domain", "by_complexity", "by_company"):
        for bucket, stats in report[section].items():
            emit(section, bucket, stats)
    return "\n".join(rows) + "\n"


def _fmt(value) -> str:
    return "" if value is None else f"{value:.1f}"


def _csv_quote(text: str) -> str:
    if "," in text or '"' in text:
        return '"' + text.replace('"', '""') + '"'
    return text


def leaderboard_row(report: dict) -> str:
    overall = report["overall"]
    accuracy = overall["accuracy"]
    cells = [f"{report['model']:<28}",
             f"overall {accuracy:6.2%}" if accuracy is not None else "overall   n/a"]
    for domain, stats in report["by_domain"].items():
        if stats["accuracy"] is not None:
            cells.append(f"{domain} {stats['accuracy']:6.2%}")
    if report.get("cost") is not None:
        cells.append(f"cost ${report['cost']:.2f}")
    return " | ".join(cells)
