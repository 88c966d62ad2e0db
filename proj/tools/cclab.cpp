#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "cclab/apps.hpp"
#include "cclab/bounds.hpp"
#include "cclab/cache.hpp"
#include "cclab/config.hpp"
#include "cclab/runner.hpp"

using namespace cclab;

namespace {

constexpr int kConfigError = 2;

struct Common {
    std::string format = "json";
    std::string output;
    std::string cache_dir;
    size_t enumeration_budget = kDefaultEnumerationBudget;
};

OutputFormat parse_format(const std::string& f) {
    if (f == "json") return OutputFormat::Json;
    if (f == "csv") return OutputFormat::Csv;
    if (f == "text") return OutputFormat::Text;
    throw ParseError("format must be json, csv or text", 0);
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

TablePtr load_table(const GroupSpec& spec, const Common& c) {
    TableCache cache = c.cache_dir.empty() ? TableCache::from_env() : TableCache(c.cache_dir);
    CacheEvent ev;
    auto t = cache.table(spec, c.enumeration_budget, &ev);
    if (!ev.warning.empty()) std::cerr << "warning: " << ev.warning << "\n";
    return t;
}

int finish(const ReportBundle& b, const RunConfig& cfg, const std::string& output) {
    for (const auto& w : b.warnings) std::cerr << "warning: " << w << "\n";
    emit(render(b, cfg), output);
    return b.exit_code();
}

int cmd_table(const std::string& spec_text, const Common& c) {
    GroupSpec spec = parse_group_spec(spec_text);
    TablePtr t = load_table(spec, c);
    TableCheck chk = verify_table(*t);
    const auto& cls = *t->classes;
    if (c.format == "json") {
        nlohmann::ordered_json doc;
        doc["group"] = spec.str();
        doc["order"] = cls.group_order();
        doc["classes"] = nlohmann::ordered_json::array();
        for (int k = 0; k < cls.count(); ++k)
            doc["classes"].push_back({{"id", k},
                                      {"order", cls.element_order(k)},
                                      {"size", cls.size(k)},
                                      {"centralizer", cls.centralizer_order(k)}});
        doc["characters"] = nlohmann::ordered_json::array();
        for (const auto& chi : t->irr) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (const auto& v : chi.values()) row.push_back(v.str());
            doc["characters"].push_back(row);
        }
        doc["verified"] = chk.ok();
        emit(doc.dump(1) + "\n", c.output);
    } else {
        std::ostringstream os;
        os << spec.str() << "  |G| = " << cls.group_order() << ", " << cls.count() << " classes\n";
        os << "class";
        for (int k = 0; k < cls.count(); ++k) os << "\t" << k;
        os << "\norder";
        for (int k = 0; k < cls.count(); ++k) os << "\t" << cls.element_order(k);
        os << "\nsize";
        for (int k = 0; k < cls.count(); ++k) os << "\t" << cls.size(k);
        os << "\n";
        for (int i = 0; i < t->size(); ++i) {
            os << "X." << i;
            for (const auto& v : t->irr[i].values()) os << "\t" << v.str();
            os << "\n";
        }
        os << "orthogonality and degree checks: " << (chk.ok() ? "ok" : "FAILED " + chk.detail) << "\n";
        emit(os.str(), c.output);
    }
    return chk.ok() ? 0 : 1;
}

ReportBundle single(const std::string& suite, const std::string& group, std::vector<BoundReport> reports) {
    ReportBundle b;
    SuiteSection s;
    s.suite = suite;
    s.group = group;
    s.status = "ok";
    s.reports = std::move(reports);
    b.sections.push_back(std::move(s));
    return b;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    for (const auto& part : split_top_level(s)) {
        try {
            size_t used = 0;
            out.push_back(std::stoi(part, &used));
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw ParseError("not a class id: " + part, 0);
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cclab: exact character theory and bound verification for finite classical groups"};
    app.require_subcommand(1);
    app.set_version_flag("--version", CCLAB_VERSION);

    Common common;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", common.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("-o,--output", common.output, "write the report to a file");
        sub->add_option("--cache-dir", common.cache_dir, "table cache directory (default: $CCLAB_CACHE_DIR)");
        sub->add_option("--enumeration-budget", common.enumeration_budget, "maximum group order")
            ->check(CLI::PositiveNumber);
    };

    std::string spec_text;

    auto* table = app.add_subcommand("table", "build, verify and print a character table");
    table->add_option("spec", spec_text, "group, e.g. Sp(4,3)")->required();
    add_common(table);

    std::string suites_text, config_path;
    std::vector<std::string> verify_specs;
    int workers = 1;
    size_t model_budget = 0, tuple_budget = 0;
    std::vector<std::string> gammas;
    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("suite", suites_text, "comma separated suites, or 'all'");
    verify->add_option("specs", verify_specs, "groups");
    verify->add_option("--config", config_path, "key = value config file; command line values override it");
    verify->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--model-budget", model_budget, "largest Weil model dimension")->check(CLI::PositiveNumber);
    verify->add_option("--tuple-budget", tuple_budget, "brute-force tuple budget")->check(CLI::PositiveNumber);
    verify->add_option("--gamma", gammas, "gamma values for the delta suite");
    add_common(verify);

    int walk_class = -1, walk_t = 8;
    auto* walk = app.add_subcommand("walk", "random walk driven by one conjugacy class");
    walk->add_option("spec", spec_text, "group")->required();
    walk->add_option("--class", walk_class, "class id (see 'cclab table')")->required();
    walk->add_option("--t", walk_t, "number of steps, at most 64")->check(CLI::Range(0, 64));
    add_common(walk);

    std::string classes_text;
    bool no_brute = false;
    auto* prod = app.add_subcommand("product-one", "count class tuples with product 1");
    prod->add_option("spec", spec_text, "group")->required();
    prod->add_option("--classes", classes_text, "class ids, e.g. 1,2,3")->required();
    prod->add_flag("--no-brute-force", no_brute, "skip the enumeration oracle");
    add_common(prod);

    std::string gamma_text;
    auto* delta = app.add_subcommand("delta", "largest feasible delta for gamma");
    delta->add_option("--gamma", gamma_text, "gamma in (4/5, 1), decimal or fraction")->required();
    add_common(delta);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kConfigError;
    }

    try {
        RunConfig cfg;
        cfg.format = parse_format(common.format);
        cfg.cache_dir = common.cache_dir;
        cfg.enumeration_budget = common.enumeration_budget;

        if (*table) return cmd_table(spec_text, common);

        if (*verify) {
            if (!config_path.empty()) {
                cfg = load_run_config(config_path);
                if (verify->count("--format")) cfg.format = parse_format(common.format);
                if (!common.cache_dir.empty()) cfg.cache_dir = common.cache_dir;
                if (verify->count("--enumeration-budget")) cfg.enumeration_budget = common.enumeration_budget;
            }
            if (!suites_text.empty()) {
                cfg.suites.clear();
                if (suites_text == "all")
                    cfg.suites = all_suites();
                else
                    for (const auto& s : split_top_level(suites_text)) cfg.suites.push_back(parse_suite(s));
            }
            if (!verify_specs.empty()) {
                cfg.groups.clear();
                for (const auto& s : verify_specs) cfg.groups.push_back(parse_group_spec(s));
            }
            if (verify->count("--workers")) cfg.workers = workers;
            if (model_budget) cfg.model_budget = model_budget;
            if (tuple_budget) cfg.tuple_budget = tuple_budget;
            if (!gammas.empty()) {
                cfg.gammas.clear();
                for (const auto& g : gammas) cfg.gammas.push_back(parse_rational(g));
            }
            cfg.validate();
            return finish(run_suite(cfg), cfg, common.output);
        }

        if (*walk) {
            GroupSpec spec = parse_group_spec(spec_text);
            TablePtr t = load_table(spec, common);
            if (walk_class < 0 || walk_class >= t->size())
                throw ParseError("class id out of range (0.." + std::to_string(t->size() - 1) + ")", 0);
            WalkReport w = mixing_bounds(*t, walk_class, walk_t);
            ReportBundle b = single("walk", spec.str(), w.reports);
            if (cfg.format == OutputFormat::Text) {
                std::ostringstream os;
                os << "t\tl1\tlinf\tds_bound\tlinf_bound\n";
                for (const auto& s : w.steps)
                    os << s.t << "\t" << to_decimal(s.l1, 6) << "\t" << to_decimal(s.linf, 6) << "\t"
                       << to_decimal(s.ds_bound, 6) << "\t" << to_decimal(s.linf_bound.hi, 6) << "\n";
                os << "mixing time (l1 < 1/4): " << (w.mixing_time ? std::to_string(*w.mixing_time) : "not reached")
                   << "\n";
                emit(os.str() + to_text(b), common.output);
                return b.exit_code();
            }
            return finish(b, cfg, common.output);
        }

        if (*prod) {
            GroupSpec spec = parse_group_spec(spec_text);
            TablePtr t = load_table(spec, common);
            auto classes = parse_int_list(classes_text);
            for (int c : classes)
                if (c < 0 || c >= t->size()) throw ParseError("class id out of range: " + std::to_string(c), 0);
            ProductOneReport p = product_one_report(*t, classes, !no_brute);
            ReportBundle b = single("product-one", spec.str(), p.reports);
            if (cfg.format == OutputFormat::Text) {
                std::ostringstream os;
                os << "N = " << p.count.str();
                if (p.brute) os << " (enumeration: " << p.brute->str() << ")";
                os << "\n";
                emit(os.str() + to_text(b), common.output);
                return b.exit_code();
            }
            return finish(b, cfg, common.output);
        }

        if (*delta) {
            BigRational gamma = parse_rational(gamma_text);
            if (!(gamma > BigRational(4, 5) && gamma < 1)) throw ParseError("gamma must lie in (4/5, 1)", 0);
            DeltaResult d = delta_solver(gamma);
            ReportBundle b = single("delta", "", d.reports);
            if (cfg.format == OutputFormat::Text) {
                emit("delta_max(" + to_decimal(gamma, 12) + ") = " + to_decimal(d.delta_max, 12) + "\n" + to_text(b),
                     common.output);
                return b.exit_code();
            }
            return finish(b, cfg, common.output);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
