// finance.hpp -- capital/operating ledger, straight-line depreciation,
// year-by-year cash flows and the summary metrics (payback, NPV, IRR, ROI,
// LCOE).
//
// Yearly flows are exact Money; with all rates at zero the whole table is
// exact decimal arithmetic end to end. Rate conventions: tariff escalation
// applies to the feed-in sale, inflation to running costs, production aging
// to both energy streams; all compound as (1+r)^year.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nzeb/money.hpp"

namespace nzeb::finance {

struct LedgerItem {
    std::string name;
    double quantity = 1;
    Money unit_cost;
    bool depreciable = false;
    int depreciation_period_years = 0; // 0 = use the schedule default
    Money salvage;

    Money total() const { return unit_cost.scaled(quantity); }
};

struct CostLedger {
    std::vector<LedgerItem> items;

    Money total() const;
    Money depreciable_base() const; // sum of depreciable item totals
};

struct FinanceParams {
    int lifetime_years = 20;
    int start_year = 0;
    double feed_in_tariff = 0;      // currency per kWh exported
    double consumption_tariff = 0;  // currency per kWh self-consumed
    double discount_rate = 0;       // fraction per year
    double inflation = 0;
    double income_tax_rate = 0;
    double tariff_escalation = 0;
    double production_aging = 0;    // usually <= 0
    Money opex_per_year;
    Money own_funds;
};

struct EnergySplit {
    double sold_kwh = 0;
    double self_consumed_kwh = 0;
};

struct CashFlowRow {
    int year = 0; // 0 = investment year
    Money electricity_sale;
    Money own_funds;
    Money running_costs;
    Money depreciation_allowance;
    Money taxable_income; // floored at 0 (what tax is applied to)
    Money taxes;
    Money after_tax_profit;
    Money self_consumption_saving;
    Money cumulative_profit;
    double percent_amortized = 0;
};

struct CashFlowSummary {
    std::optional<double> payback_years;
    Money npv;
    double roi = 0;
    std::optional<double> irr;
    std::string irr_note;
    double lcoe = 0;
};

struct CashFlowSchedule {
    std::vector<CashFlowRow> rows; // size lifetime+1
    CashFlowSummary summary;
};

// Per-year depreciation allowance, years 1..max period. Each depreciable item
// contributes (total - salvage)/period per year of its period; the final year
// absorbs the rounding remainder so the schedule sums exactly to
// (depreciable base - salvages). Only "straight-line" is supported.
std::vector<Money> depreciation_schedule(const CostLedger& ledger, const std::string& method,
                                         int default_period_years);

CashFlowSchedule cash_flow_table(const FinanceParams& params, const CostLedger& ledger,
                                 const EnergySplit& energy);

enum class PaybackConvention { interpolated, whole_year };

// Years until cumulative profit crosses zero; linear interpolation within the
// crossing year by default. nullopt when it never crosses.
std::optional<double> simple_payback(const CashFlowSchedule& schedule,
                                     PaybackConvention convention = PaybackConvention::interpolated);

struct NpvResult {
    Money npv;
    double roi = 0; // npv / own funds
};

NpvResult npv(const CashFlowSchedule& schedule, double discount_rate);

struct IrrResult {
    std::optional<double> rate;
    std::string note; // set when undefined or when flows change sign more than once
};

// Root of npv(r) = 0 by bracketing bisection on [-0.99, 10], tolerance 1e-7.
IrrResult irr(const CashFlowSchedule& schedule);

// Lifecycle cost per lifecycle energy, both discounted at params.discount_rate.
double lcoe(const CostLedger& ledger, const FinanceParams& params, double annual_energy_kwh);

// Fig-8-style table: Year, Electricity sale, Own funds, Run. costs,
// Deprec. allow., Taxable income, Taxes, After-tax profit, Self-cons. saving,
// Cumul. profit, % amort.
void write_cashflow_csv(const CashFlowSchedule& schedule, std::ostream& out);

} // namespace nzeb::finance
