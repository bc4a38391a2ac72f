import datetime as dt
from dataclasses import replace

import pytest

from ledgerbench.core import CompanyKind, Money, builtin_profile
from ledgerbench.simulation import (
    SimulationConfig,
    Transaction,
    TxType,
    PayMethod,
    PayStatus,
    simulate,
    with_transactions,
)
from ledgerbench.statements import (
    BalanceSheet,
    JournalReplayError,
    articulation_check,
    compile as compile_statements,
    identity_check,
    parse_structured,
    render,
    render_text,
    statements_from_dict,
    statements_to_dict,
)

from oracles import naive_compile
from reference_fixtures import example_statements


def _empty_journal():
    profile = replace(builtin_profile(CompanyKind.TYPE_II),
                      fixed_asset_purchase_freq=(0.0, 0.0),
                      purchase_freq=(0.0, 0.0), sales_freq=(0.0, 0.0),
                      expense_freq=(0.0, 0.0),
                      initial_fixed_assets=Money.parse("5000000"))
    config = SimulationConfig(seed=0, start_date=dt.date(2024, 1, 2),
                              end_date=dt.date(2024, 1, 2))
    return simulate(profile, config)


def test_empty_journal_opening_balances_only():
    statements = compile_statements(_empty_journal())
    bs = statements.balance_sheet
    assert bs.initial.total_assets == Money.parse("13000000")
    assert bs.end.total_assets == Money.parse("13000000")
    assert statements.income_statement.net_profit == Money(0)
    assert statements.cash_flow_statement.net_increase == Money(0)
    assert identity_check(statements) == []
    assert articulation_check(statements) == []


def test_example_income_statement_arithmetic():
    inc = example_statements().income_statement
    assert inc.net_profit == inc.profit_before_tax - inc.tax_expense
    assert inc.net_profit == Money.parse("-1645141.43")
    assert inc.gross_profit == inc.total_revenue - inc.total_cost


def test_example_cash_flow_arithmetic():
    cfs = example_statements().cash_flow_statement
    assert cfs.net_increase == (cfs.net_operating_cash_flow
                                + cfs.net_investing_cash_flow)
    assert cfs.net_increase == Money.parse("-7565348.53")
    assert cfs.ending_cash_balance == (cfs.beginning_cash_balance
                                       + cfs.net_increase)
    assert cfs.ending_cash_balance == Money.parse("434651.47")


def test_transcribed_example_articulates_within_display_slack():
    # The source tables round the equity totals to whole units, so the
    # retained-earnings link may drift, but never by more than 0.05.
    violations = articulation_check(example_statements())
    assert all("retained earnings" in v for v in violations)
    strict = articulation_check(example_statements(),
                                tolerance=Money.parse("0.05"))
    assert strict == []


def test_compiled_statements_clean_across_seeds_and_profiles():
    for seed in range(4):
        for kind in (CompanyKind.TYPE_I, CompanyKind.TYPE_III,
                     CompanyKind.TYPE_V):
            journal = simulate(builtin_profile(kind),
                               SimulationConfig(seed=seed,
                                                target_transactions=150))
            statements = compile_statements(journal)
            assert identity_check(statements) == []
            assert articulation_check(statements) == []


def test_articulation_flags_perturbed_retained_earnings():
    statements = compile_statements(_small_journal())
    bs = statements.balance_sheet
    perturbed_end = replace(
        bs.end, retained_earnings=bs.end.retained_earnings + Money(100))
    perturbed = replace(
        statements,
        balance_sheet=BalanceSheet(initial=bs.initial, end=perturbed_end))
    violations = articulation_check(perturbed)
    assert any("retained earnings" in v for v in violations)


def _small_journal(seed=13, target=40):
    return simulate(builtin_profile(CompanyKind.TYPE_II),
                    SimulationConfig(seed=seed, target_transactions=target))


def test_compile_matches_naive_oracle_exactly():
    for seed in range(8):
        for kind in (CompanyKind.TYPE_II, CompanyKind.TYPE_IV):
            journal = simulate(builtin_profile(kind),
                               SimulationConfig(seed=seed,
                                                target_transactions=50))
            assert compile_statements(journal) == naive_compile(journal)


def test_compile_is_pure():
    journal = _small_journal()
    assert compile_statements(journal) == compile_statements(journal)


def test_articulation_over_many_seeds():
    for seed in range(30):
        journal = simulate(builtin_profile(CompanyKind.TYPE_V),
                           SimulationConfig(seed=seed,
                                            target_transactions=80))
        assert articulation_check(compile_statements(journal)) == []


def test_replay_error_names_offending_transaction():
    journal = _small_journal()
    rogue = Transaction(
        id="TXN-99999", date=journal.transactions[-1].date,
        tx_type=TxType.CASH_TO_BANK_TRANSFER, quantity=0,
        unit_price=Money(0), amount=Money.parse("999999999.00"),
        tax_amount=Money(0), total_amount=Money.parse("999999999.00"),
        cost_amount=Money(0), profit=Money(0),
        payment_receipt_status=PayStatus.NA, payment_method=PayMethod.NA,
        receive_method=PayMethod.NA, preparer="System", approver="System")
    broken = with_transactions(journal, journal.transactions + (rogue,))
    with pytest.raises(JournalReplayError) as excinfo:
        compile_statements(broken)
    assert excinfo.value.transaction_id == "TXN-99999"


def test_text_rendering_matches_reference_layout():
    text = render_text(example_statements())
    balance_lines = [
        "Cash on Hand", "Bank Deposits", "Interest Receivable",
        "Accounts Receivable", "Inventory", "Total Current Assets",
        "Fixed Assets", "Accumulated Depreciation", "Net Fixed Assets",
        "Total Non-Current Assets", "Total Assets", "Accounts Payable",
        "Taxes Payable", "Total Current Liabilities", "Total Liabilities",
        "Paid-in Capital", "Retained Earnings", "Total Owner's Equity",
        "Total Liabilities and Equity"]
    positions = [text.index(name) for name in balance_lines]
    assert positions == sorted(positions)
    assert "(45751.41)" in text          # negative shown in parentheses
    assert "(4410000.00)" in text        # cost section bracketed
    assert "Net Cash Flow From Operations" in text
    assert "(7565348.53)" in text        # net increase


def test_structured_round_trip():
    statements = compile_statements(_small_journal())
    assert parse_structured(render(statements, "structured")) == statements
    assert statements_from_dict(statements_to_dict(statements)) == statements


def test_render_rejects_unknown_format():
    with pytest.raises(ValueError):
        render(compile_statements(_small_journal()), "pdf")
