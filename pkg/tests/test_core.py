import json

import pytest
from hypothesis import given, strategies as st

from ledgerbench.core import (
    BUILTIN_KINDS,
    CompanyKind,
    Money,
    MoneyOverflowError,
    ProfileError,
    builtin_profile,
    load_profile,
    profile_to_dict,
    qty_parse,
    qty_str,
    qty_times_price,
    round_half_up,
    save_profile,
)

cents = st.integers(min_value=-10**13, max_value=10**13)


@given(cents, cents)
def test_money_addition_group_property(a, b):
    x, y = Money(a), Money(b)
    assert (x + y) - y == x


@given(cents)
def test_round_half_up_idempotent_on_rounded_values(a):
    assert round_half_up(Money(a)) == Money(a)


@pytest.mark.parametrize("raw, expected", [
    ("271550.9295", "271550.93"),
    ("0.005", "0.01"),
    ("-9.555", "-9.56"),
    ("-0.005", "-0.01"),
    ("2.675", "2.68"),
    (0.005, "0.01"),
])
def test_round_half_up_examples(raw, expected):
    assert str(round_half_up(raw)) == expected


def test_money_display_always_two_digits():
    assert str(Money(5)) == "0.05"
    assert str(Money(-5)) == "-0.05"
    assert str(Money(123400)) == "1234.00"


def test_money_overflow():
    with pytest.raises(MoneyOverflowError):
        Money(10**17)
    with pytest.raises(MoneyOverflowError):
        round_half_up("100000000000000000")


def test_first_of_month():
    from ledgerbench.core import first_of_month, parse_date
    assert first_of_month(parse_date("2024-03-17")).day == 1
    assert first_of_month(parse_date("2024-03-01")) == parse_date("2024-03-01")


def test_quantity_helpers():
    assert qty_parse("15.00") == 1500
    assert qty_str(1500) == "15.00"
    assert qty_times_price(500, Money.parse("100.00")) == Money.parse("500.00")
    # 2.5 units at 33.33 -> 83.325 -> 83.33 by the half-up rule
    assert qty_times_price(250, Money.parse("33.33")) == Money.parse("83.33")


def test_builtin_profile_type_i_row():
    p = builtin_profile(CompanyKind.TYPE_I)
    assert p.purchase_unit_price == Money.parse("950000")
    assert p.sales_freq == (0.00, 1.00)
    assert p.credit_sales_ratio == 0.6
    assert p.paid_in_capital == Money.parse("28000000")


def test_builtin_profile_type_v_row():
    p = builtin_profile(CompanyKind.TYPE_V)
    assert p.credit_purchase_ratio == 0.6
    assert p.quantity_per_purchase == qty_parse("500.00")
    assert p.purchase_unit_price == Money.parse("1823")
    assert p.paid_in_capital == Money.parse("16000000")


def test_builtin_profile_type_ii_capital_split():
    p = builtin_profile(CompanyKind.TYPE_II)
    assert p.initial_cash == Money.parse("3000000")
    assert p.initial_bank == Money.parse("5000000")
    assert p.initial_fixed_assets == Money.parse("5000000")


def test_capital_split_sums_exactly_for_all_types():
    for kind in BUILTIN_KINDS:
        p = builtin_profile(kind)
        assert (p.initial_cash + p.initial_bank + p.initial_fixed_assets
                == p.paid_in_capital)


REFERENCE_ROWS = {
    CompanyKind.TYPE_I: ("28000000", (0.0, 2.0), "950000", (0.30, 0.50),
                         "1.00", (1.0, 2.0), 0.1, "1.00", (0.0, 1.0), 0.6,
                         (1.0, 2.0)),
    CompanyKind.TYPE_II: ("13000000", (1.0, 2.0), "45000", (0.10, 0.40),
                          "15.00", (1.0, 3.0), 0.1, "5.00", (1.0, 2.0), 0.4,
                          (2.0, 4.0)),
    CompanyKind.TYPE_III: ("13000000", (1.0, 2.0), "21250", (0.70, 1.00),
                           "5.00", (2.0, 4.0), 0.3, "3.00", (2.0, 4.0), 0.3,
                           (2.0, 3.0)),
    CompanyKind.TYPE_IV: ("13000000", (0.0, 1.0), "31500", (0.80, 2.00),
                          "2.00", (0.0, 2.0), 0.3, "1.00", (0.0, 3.0), 0.7,
                          (1.0, 2.0)),
    CompanyKind.TYPE_V: ("16000000", (0.0, 2.0), "1823", (0.30, 0.80),
                         "500.00", (1.0, 3.0), 0.6, "5.00", (2.0, 4.0), 0.4,
                         (1.0, 2.0)),
}


def test_builtin_profiles_match_reference_table_verbatim():
    for kind, row in REFERENCE_ROWS.items():
        (capital, fa_freq, price, margin, qpp, pf, cpr, qps, sf, csr,
         ef) = row
        p = builtin_profile(kind)
        assert p.paid_in_capital == Money.parse(capital)
        assert p.fixed_asset_purchase_freq == fa_freq
        assert p.purchase_unit_price == Money.parse(price)
        assert p.profit_margin == margin
        assert p.quantity_per_purchase == qty_parse(qpp)
        assert p.purchase_freq == pf
        assert p.credit_purchase_ratio == cpr
        assert p.quantity_per_sale == qty_parse(qps)
        assert p.sales_freq == sf
        assert p.credit_sales_ratio == csr
        assert p.expense_freq == ef


def test_profile_file_round_trip(tmp_path):
    original = builtin_profile(CompanyKind.TYPE_III)
    path = tmp_path / "profile.json"
    save_profile(original, path)
    assert load_profile(path) == original


def test_profile_rejects_ratio_out_of_bounds(tmp_path):
    doc = profile_to_dict(builtin_profile(CompanyKind.TYPE_II))
    doc["credit_sales_ratio"] = 1.3
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    with pytest.raises(ProfileError, match="credit_sales_ratio"):
        load_profile(path)


def test_profile_rejects_min_above_max(tmp_path):
    doc = profile_to_dict(builtin_profile(CompanyKind.TYPE_II))
    doc["sales_freq_min"] = 3.0
    doc["sales_freq_max"] = 1.0
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    with pytest.raises(ProfileError, match="sales_freq"):
        load_profile(path)


def test_profile_parse_error_named(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    with pytest.raises(ProfileError):
        load_profile(path)
