#include "nzeb/finance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "nzeb/errors.hpp"

namespace nzeb::finance {

Money CostLedger::total() const {
    Money t;
    for (const auto& it : items) t += it.total();
    return t;
}

Money CostLedger::depreciable_base() const {
    Money t;
    for (const auto& it : items)
        if (it.depreciable) t += it.total();
    return t;
}

std::vector<Money> depreciation_schedule(const CostLedger& ledger, const std::string& method,
                                         int default_period_years) {
    if (method != "straight-line")
        throw domain_error("depreciation_schedule: unsupported method '" + method +
                           "' (only straight-line)");
    if (default_period_years <= 0)
        throw domain_error("depreciation_schedule: period must be > 0");

    int max_period = 0;
    for (const auto& it : ledger.items)
        if (it.depreciable)
            max_period = std::max(max_period, it.depreciation_period_years > 0
                                                  ? it.depreciation_period_years
                                                  : default_period_years);

    std::vector<Money> schedule(static_cast<size_t>(max_period));
    for (const auto& it : ledger.items) {
        if (!it.depreciable) continue;
        const int period =
            it.depreciation_period_years > 0 ? it.depreciation_period_years : default_period_years;
        const Money base = it.total() - it.salvage;
        const Money annual = base.scaled(1.0 / period);
        Money allocated;
        for (int y = 0; y < period; ++y) {
            const Money amount = (y == period - 1) ? base - allocated : annual;
            schedule[static_cast<size_t>(y)] += amount;
            allocated += amount;
        }
    }
    return schedule;
}

CashFlowSchedule cash_flow_table(const FinanceParams& params, const CostLedger& ledger,
                                 const EnergySplit& energy) {
    if (params.lifetime_years <= 0) throw domain_error("cash_flow_table: lifetime must be > 0");
    if (energy.sold_kwh < 0 || energy.self_consumed_kwh < 0)
        throw domain_error("cash_flow_table: energy must be >= 0");

    const auto dep = depreciation_schedule(ledger, "straight-line", params.lifetime_years);

    CashFlowSchedule out;
    out.rows.reserve(static_cast<size_t>(params.lifetime_years) + 1);

    CashFlowRow r0;
    r0.year = 0;
    r0.own_funds = params.own_funds;
    r0.cumulative_profit = -params.own_funds;
    out.rows.push_back(r0);

    Money cumulative = -params.own_funds;
    for (int y = 1; y <= params.lifetime_years; ++y) {
        const double aging = std::pow(1.0 + params.production_aging, y);
        const double sold = energy.sold_kwh * aging;
        const double self = energy.self_consumed_kwh * aging;

        CashFlowRow r;
        r.year = y;
        r.electricity_sale = Money::from_value(
            sold * params.feed_in_tariff * std::pow(1.0 + params.tariff_escalation, y));
        r.running_costs = params.opex_per_year.scaled(std::pow(1.0 + params.inflation, y));
        r.depreciation_allowance =
            static_cast<size_t>(y) <= dep.size() ? dep[static_cast<size_t>(y - 1)] : Money();
        const Money taxable_raw = r.electricity_sale - r.running_costs - r.depreciation_allowance;
        r.taxable_income = std::max(taxable_raw, Money());
        r.taxes = r.taxable_income.scaled(params.income_tax_rate);
        r.after_tax_profit = r.electricity_sale - r.running_costs - r.taxes;
        r.self_consumption_saving = Money::from_value(self * params.consumption_tariff);
        cumulative += r.after_tax_profit + r.self_consumption_saving;
        r.cumulative_profit = cumulative;
        r.percent_amortized =
            params.own_funds.minor() != 0
                ? static_cast<double>((cumulative + params.own_funds).minor()) /
                      static_cast<double>(params.own_funds.minor())
                : 0.0;
        out.rows.push_back(r);
    }

    out.summary.payback_years = simple_payback(out);
    const auto npv_result = npv(out, params.discount_rate);
    out.summary.npv = npv_result.npv;
    out.summary.roi = npv_result.roi;
    const auto irr_result = irr(out);
    out.summary.irr = irr_result.rate;
    out.summary.irr_note = irr_result.note;
    out.summary.lcoe = (energy.sold_kwh + energy.self_consumed_kwh) > 0
                           ? lcoe(ledger, params, energy.sold_kwh + energy.self_consumed_kwh)
                           : 0.0;
    return out;
}

std::optional<double> simple_payback(const CashFlowSchedule& schedule,
                                     PaybackConvention convention) {
    const auto& rows = schedule.rows;
    if (rows.empty()) return std::nullopt;
    if (rows.front().cumulative_profit >= Money()) return 0.0;
    for (size_t y = 1; y < rows.size(); ++y) {
        if (rows[y].cumulative_profit >= Money()) {
            if (convention == PaybackConvention::whole_year) return static_cast<double>(y);
            const double gained = static_cast<double>(
                (rows[y].cumulative_profit - rows[y - 1].cumulative_profit).minor());
            const double deficit = static_cast<double>(-rows[y - 1].cumulative_profit.minor());
            return (y - 1) + (gained > 0 ? deficit / gained : 0.0);
        }
    }
    return std::nullopt; // never crosses zero
}

namespace {

// year-0 outflow followed by the yearly net benefits
std::vector<double> net_flows(const CashFlowSchedule& schedule) {
    std::vector<double> flows;
    flows.reserve(schedule.rows.size());
    for (const auto& r : schedule.rows) {
        if (r.year == 0)
            flows.push_back(-r.own_funds.value());
        else
            flows.push_back((r.after_tax_profit + r.self_consumption_saving).value());
    }
    return flows;
}

double npv_at(const std::vector<double>& flows, double r) {
    double v = 0;
    for (size_t y = 0; y < flows.size(); ++y) v += flows[y] / std::pow(1.0 + r, static_cast<double>(y));
    return v;
}

} // namespace

NpvResult npv(const CashFlowSchedule& schedule, double discount_rate) {
    if (discount_rate <= -1.0) throw domain_error("npv: discount rate must be > -100%");
    NpvResult out;
    if (discount_rate == 0.0) {
        // exact decimal path
        Money sum;
        for (const auto& r : schedule.rows)
            sum += (r.year == 0) ? -r.own_funds : r.after_tax_profit + r.self_consumption_saving;
        out.npv = sum;
    } else {
        out.npv = Money::from_value(npv_at(net_flows(schedule), discount_rate));
    }
    const Money own = schedule.rows.empty() ? Money() : schedule.rows.front().own_funds;
    out.roi = own.minor() != 0
                  ? static_cast<double>(out.npv.minor()) / static_cast<double>(own.minor())
                  : 0.0;
    return out;
}

IrrResult irr(const CashFlowSchedule& schedule) {
    const auto flows = net_flows(schedule);
    int sign_changes = 0;
    double prev = 0;
    bool have_prev = false;
    for (double f : flows) {
        if (f == 0) continue;
        if (have_prev && ((prev < 0) != (f < 0))) ++sign_changes;
        prev = f;
        have_prev = true;
    }
    IrrResult out;
    if (sign_changes == 0) {
        out.note = "undefined IRR: cash flows never change sign";
        return out;
    }
    if (sign_changes > 1)
        out.note = "cash flows change sign more than once; smallest positive root reported";

    // walk [lo, hi] for the first bracket, then bisect
    const double lo_bound = -0.99, hi_bound = 10.0;
    const double coarse = 1e-3;
    double a = sign_changes > 1 ? 0.0 : lo_bound;
    double fa = npv_at(flows, a);
    double root_lo = 0, root_hi = 0;
    bool bracketed = false;
    for (double b = a + coarse; b <= hi_bound + coarse / 2; b += coarse) {
        const double fb = npv_at(flows, b);
        if (fa == 0.0) {
            out.rate = a;
            return out;
        }
        if ((fa > 0) != (fb > 0)) {
            root_lo = a;
            root_hi = b;
            bracketed = true;
            break;
        }
        a = b;
        fa = fb;
    }
    if (!bracketed) {
        out.rate = std::nullopt;
        out.note = "undefined IRR: no root in [-0.99, 10]";
        return out;
    }
    double flo = npv_at(flows, root_lo);
    while (root_hi - root_lo > 1e-7) {
        const double mid = 0.5 * (root_lo + root_hi);
        const double fm = npv_at(flows, mid);
        if ((flo > 0) == (fm > 0)) {
            root_lo = mid;
            flo = fm;
        } else {
            root_hi = mid;
        }
    }
    out.rate = 0.5 * (root_lo + root_hi);
    return out;
}

double lcoe(const CostLedger& ledger, const FinanceParams& params, double annual_energy_kwh) {
    if (annual_energy_kwh <= 0) throw domain_error("lcoe: annual energy must be > 0");
    if (params.discount_rate <= -1.0) throw domain_error("lcoe: discount rate must be > -100%");
    double cost = ledger.total().value();
    double energy = 0;
    for (int y = 1; y <= params.lifetime_years; ++y) {
        const double disc = std::pow(1.0 + params.discount_rate, y);
        cost += params.opex_per_year.value() * std::pow(1.0 + params.inflation, y) / disc;
        energy += annual_energy_kwh * std::pow(1.0 + params.production_aging, y) / disc;
    }
    return cost / energy;
}

void write_cashflow_csv(const CashFlowSchedule& schedule, std::ostream& out) {
    out << "Year,Electricity sale,Own funds,Run. costs,Deprec. allow.,Taxable income,Taxes,"
           "After-tax profit,Self-cons. saving,Cumul. profit,% amort.\n";
    char buf[64];
    for (const auto& r : schedule.rows) {
        out << r.year << ',' << r.electricity_sale.str() << ',' << r.own_funds.str() << ','
            << r.running_costs.str() << ',' << r.depreciation_allowance.str() << ','
            << r.taxable_income.str() << ',' << r.taxes.str() << ',' << r.after_tax_profit.str()
            << ',' << r.self_consumption_saving.str() << ',' << r.cumulative_profit.str();
        std::snprintf(buf, sizeof buf, ",%.1f%%\n", r.percent_amortized * 100.0);
        out << buf;
    }
}

} // namespace nzeb::finance
