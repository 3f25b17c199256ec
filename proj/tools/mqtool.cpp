#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mq/canonical.hpp"
#include "mq/classify.hpp"
#include "mq/invariants.hpp"
#include "mq/mckay.hpp"
#include "mq/reduction.hpp"
#include "mq/stability.hpp"

using nlohmann::json;

namespace {

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw mq::validation_error("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw mq::validation_error("malformed JSON in '" + path + "': " + e.what());
    }
    return j;
}

void emit(const json& j, const std::string& out_path) {
    std::string text = j.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw mq::validation_error("cannot write '" + out_path + "'");
        out << text;
    }
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw mq::validation_error("bad integer list entry '" + tok + "'");
        }
    }
    if (out.empty()) throw mq::validation_error("empty integer list");
    return out;
}

json setting_report(const mq::MarkedQuiverSetting& s) {
    json j = mq::setting_to_json(s);
    j["dimension"] = mq::central_dimension(s);
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"marked quiver setting toolkit"};
    app.require_subcommand(1);

    std::string in_path, out_path, strategy = "det", table_path, scheme_path, relations_path,
                rep_path, theta_str, beta_str, v_str;
    std::uint64_t seed = 0;
    int kmax = -1, maxlen = -1, trials = 10, dim = 0, cyclic_n = 0;
    bool serial = false, with_relations = false;

    auto* reduce = app.add_subcommand("reduce", "play the reduction game to the zero setting");
    reduce->add_option("--in", in_path)->required();
    reduce->add_option("--strategy", strategy, "det or seed:N");
    reduce->add_option("--out", out_path);

    auto* classify = app.add_subcommand("classify", "smooth/singular verdict for a setting");
    classify->add_option("--in", in_path)->required();
    classify->add_option("--out", out_path);

    auto* enumerate = app.add_subcommand("enumerate", "singular zero settings of a dimension");
    enumerate->add_option("--dim", dim)->required();
    enumerate->add_option("--kmax", kmax);
    enumerate->add_flag("--serial", serial, "use the single-threaded reference");
    enumerate->add_option("--out", out_path);

    auto* mckay = app.add_subcommand("mckay", "McKay quiver setting from character data");
    mckay->add_option("--cyclic", cyclic_n, "cyclic group order");
    mckay->add_option("--table", table_path, "character table document");
    mckay->add_option("--v", v_str, "weights (cyclic) or 1-based summand rows (table)")->required();
    mckay->add_flag("--relations", with_relations, "emit skew-group relations (cyclic only)");
    mckay->add_option("--out", out_path);

    auto* stability = app.add_subcommand("stability", "stability analysis");
    auto* stab_check = stability->add_subcommand("check", "thin-representation verdict");
    stab_check->add_option("--rep", rep_path)->required();
    stab_check->add_option("--theta", theta_str)->required();
    stab_check->add_option("--out", out_path);
    stability->require_subcommand(1);

    auto* localize = app.add_subcommand("localize", "universal-localization presentation");
    localize->add_option("--scheme", scheme_path)->required();
    localize->add_option("--relations", relations_path)->required();
    localize->add_option("--rep", rep_path, "also extend this representation");
    localize->add_option("--out", out_path);

    auto* invariants = app.add_subcommand("invariants", "cycle generators of the invariant ring");
    invariants->add_option("--in", in_path)->required();
    invariants->add_option("--maxlen", maxlen);
    invariants->add_option("--out", out_path);

    auto* blockgen = app.add_subcommand("blockgen", "path generators of the block order");
    blockgen->add_option("--in", in_path)->required();
    blockgen->add_option("--beta", beta_str)->required();
    blockgen->add_option("--maxlen", maxlen);
    blockgen->add_option("--out", out_path);

    auto* confluence = app.add_subcommand("confluence", "randomized uniqueness check");
    confluence->add_option("--in", in_path)->required();
    confluence->add_option("--trials", trials);
    confluence->add_option("--seed", seed);
    confluence->add_option("--out", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*reduce) {
            auto s = mq::setting_from_json(read_json(in_path));
            std::pair<mq::MarkedQuiverSetting, mq::ReductionTrace> result =
                [&] {
                    if (strategy == "det") return mq::reduce_to_zero(s, mq::Deterministic{});
                    if (strategy.rfind("seed:", 0) == 0)
                        return mq::reduce_to_zero(
                            s, mq::Seeded{(std::uint64_t)std::stoull(strategy.substr(5))});
                    throw mq::validation_error("strategy must be 'det' or 'seed:N'");
                }();
            emit(mq::trace_to_json(result.second, result.first), out_path);
        } else if (*classify) {
            auto s = mq::setting_from_json(read_json(in_path));
            auto res = mq::smooth_local_type(s);
            json j;
            j["verdict"] = res.smooth ? "smooth" : "singular";
            j["zero_setting"] = setting_report(res.zero_setting);
            j["dimension"] = mq::central_dimension(res.zero_setting);
            if (res.smooth) j["smooth_form"] = res.matched;
            if (auto rec = mq::known_singularity(s)) {
                j["name"] = rec->name;
                j["presentation"] = rec->presentation;
            }
            if (auto iso = mq::detect_isolated(s)) {
                std::string t = "T(";
                for (size_t i = 0; i < iso->multiplicities.size(); ++i)
                    t += (i ? "," : "") + std::to_string(iso->multiplicities[i]);
                j["isolated"] = t + ")";
            }
            emit(j, out_path);
        } else if (*enumerate) {
            auto list = serial ? mq::enumerate_zero_settings_serial(dim, kmax)
                               : mq::enumerate_zero_settings(dim, kmax);
            json j;
            j["count"] = list.size();
            j["note"] = "deduplicated by setting isomorphism only; isomorphism of "
                        "invariant rings is not folded in";
            json arr = json::array();
            for (const auto& s : list) arr.push_back(setting_report(s));
            j["settings"] = arr;
            emit(j, out_path);
        } else if (*mckay) {
            if ((cyclic_n > 0) == !table_path.empty())
                throw mq::validation_error("give exactly one of --cyclic and --table");
            json j;
            if (cyclic_n > 0) {
                auto weights = parse_int_list(v_str);
                auto table = mq::cyclic_group_table(cyclic_n);
                auto setting =
                    mq::mckay_quiver(table, mq::cyclic_weight_character(cyclic_n, weights));
                j["setting"] = setting_report(setting);
                if (with_relations) {
                    auto pres = mq::abelian_skew_relations(cyclic_n, weights);
                    j["presentation"] = mq::presentation_to_json(pres);
                }
            } else {
                if (with_relations)
                    throw mq::validation_error("--relations requires a cyclic group (--cyclic)");
                auto table = mq::character_table_from_json(read_json(table_path));
                std::vector<mq::Cyclotomic> chi_V;
                for (int row : parse_int_list(v_str)) {
                    if (row < 1 || row > (int)table.chars.size())
                        throw mq::validation_error("summand row out of range");
                    const auto& r = table.chars[row - 1];
                    if (chi_V.empty()) chi_V = r;
                    else
                        for (size_t c = 0; c < r.size(); ++c) chi_V[c] = chi_V[c] + r[c];
                }
                j["setting"] = setting_report(mq::mckay_quiver(table, chi_V));
            }
            emit(j, out_path);
        } else if (*stab_check) {
            auto rep = mq::representation_from_json(read_json(rep_path));
            auto theta_ints = parse_int_list(theta_str);
            mq::StabilityVector theta(theta_ints.begin(), theta_ints.end());
            auto verdict = mq::thin_stability_oracle(rep, theta);
            emit(json{{"verdict", mq::stability_name(verdict)}}, out_path);
        } else if (*localize) {
            auto base = mq::presentation_from_json(read_json(relations_path));
            auto scheme =
                mq::scheme_from_json(read_json(scheme_path), base.quiver, base.alpha);
            auto pres = mq::localization_presentation(base, scheme);
            json j;
            j["presentation"] = mq::presentation_to_json(pres);
            if (!rep_path.empty()) {
                auto rep = mq::representation_from_json(read_json(rep_path));
                auto blocks = mq::extension_blocks(scheme, rep);
                json vals = json::array();
                for (const auto& b : blocks) {
                    json mat = json::array();
                    for (int r = 0; r < b.rows(); ++r) {
                        json row = json::array();
                        for (int c = 0; c < b.cols(); ++c)
                            row.push_back(mq::rational_to_string(b(r, c)));
                        mat.push_back(row);
                    }
                    vals.push_back(mat);
                }
                j["extension"] = vals;
            }
            emit(j, out_path);
        } else if (*invariants) {
            auto s = mq::setting_from_json(read_json(in_path));
            auto q = mq::label_setting(s);
            int bound = maxlen > 0 ? maxlen : mq::default_cycle_bound(s.alpha);
            auto cycles = mq::enumerate_cycles(q, bound);
            json arr = json::array();
            for (const auto& c : cycles)
                arr.push_back({{"word", mq::cycle_string(q, c)},
                               {"length", c.arrows.size()},
                               {"primitive", c.primitive}});
            emit(json{{"maxlen", bound}, {"cycles", arr}}, out_path);
        } else if (*blockgen) {
            auto s = mq::setting_from_json(read_json(in_path));
            auto q = mq::label_setting(s);
            auto beta_ints = parse_int_list(beta_str);
            int bound = maxlen > 0 ? maxlen : 2;
            auto gen = mq::block_order_generators(
                q, mq::MoritaSetting(beta_ints.begin(), beta_ints.end()), bound);
            json table = json::array();
            for (int i = 0; i < gen.k; ++i) {
                json row = json::array();
                for (int jj = 0; jj < gen.k; ++jj) {
                    json cell = json::array();
                    for (const auto& p : gen.entries[i][jj])
                        cell.push_back(mq::path_string(q, p));
                    row.push_back(cell);
                }
                table.push_back(row);
            }
            emit(json{{"maxlen", bound}, {"entries", table}}, out_path);
        } else if (*confluence) {
            auto s = mq::setting_from_json(read_json(in_path));
            bool ok = mq::verify_confluence(s, trials, seed);
            auto [zero, trace] = mq::reduce_to_zero(s, mq::Deterministic{});
            emit(json{{"confluent", ok},
                      {"trials", trials},
                      {"z", trace.z},
                      {"zero_setting", setting_report(zero)}},
                 out_path);
        }
    } catch (const mq::resource_error& e) {
        std::cout << json{{"error", {{"type", "resource"}, {"message", e.what()}}}}.dump(2)
                  << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cout << json{{"error", {{"type", "validation"}, {"message", e.what()}}}}.dump(2)
                  << "\n";
        return 1;
    }
    return 0;
}
