#include "yf/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "yf/f_coeffs.hpp"
#include "yf/measures.hpp"
#include "yf/numeric.hpp"
#include "yf/path_count.hpp"
#include "yf/q_poly.hpp"
#include "yf/word.hpp"

namespace yf {

OutputFormat parse_output_format(std::string_view name)
{
    if (name == "plain") return OutputFormat::plain;
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    if (name == "dot") return OutputFormat::dot;
    throw std::invalid_argument("unknown output format '" + std::string(name) + "'");
}

std::string hasse_dot(std::size_t max_rank, std::optional<std::size_t> max_twos)
{
    std::ostringstream os;
    auto quoted = [](const Word& w) { return "\"" + w.str() + "\""; };

    os << "digraph yf {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=plaintext];\n";
    std::vector<std::vector<Word>> levels;
    for (std::size_t r = 0; r <= max_rank; ++r) {
        levels.push_back(words_of_rank(r, max_twos));
        os << "  { rank=same;";
        for (const Word& w : levels.back()) os << ' ' << quoted(w) << ';';
        os << " }\n";
    }
    for (std::size_t r = 0; r < max_rank; ++r)
        for (const Word& w : levels[r])
            for (const Word& u : covers_up(w))
                if (!max_twos || u.twos() <= *max_twos)
                    os << "  " << quoted(w) << " -> " << quoted(u) << ";\n";
    os << "}\n";
    return os.str();
}

namespace {

// Input problems that map to exit code 2.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::string rational_line(const BigRat& q)
{
    return format_rational(q) + " " + format_float(q);
}

std::string join_words(const std::vector<Word>& words)
{
    std::string out;
    for (const Word& w : words) {
        if (!out.empty()) out += ' ';
        out += w.str();
    }
    return out;
}

std::vector<std::size_t> parse_m_list(const std::string& text)
{
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw ValidationError("invalid entry '" + item + "' in --m list");
        out.push_back(std::stoul(item));
    }
    if (out.empty()) throw ValidationError("--m list is empty");
    return out;
}

MeasureParams measure_params(std::size_t k, const std::string& tail, const std::string& p)
{
    return MeasureParams::make(k, Word::parse(tail), parse_rational(p));
}

void require_format(OutputFormat got, std::initializer_list<OutputFormat> allowed, const char* cmd)
{
    if (std::find(allowed.begin(), allowed.end(), got) == allowed.end())
        throw ValidationError(std::string("output format not supported by '") + cmd + "'");
}

} // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact path counts, boundary polynomials and central measures on the "
                 "Young-Fibonacci jump graph"};
    app.require_subcommand(1);

    std::string from = "e", to, left, right, word, tail, p_text, eval_text, format_text, m_text,
                tol_text, prefix = "e", method = "closed";
    std::size_t steps = 0, k = 0, level = 0, max_len = 60, levels = 0, max_rank = 0;
    std::uint64_t seed = 0;
    bool down = false;

    auto* count = app.add_subcommand("count", "number of jump-graph paths D(w, v, n)");
    count->add_option("--from", from, "start word")->required();
    count->add_option("--to", to, "end word")->required();
    count->add_option("--steps", steps, "path length n")->required();
    count->add_option("--method", method, "oracle | recursive | closed")->capture_default_str();

    auto* chains = app.add_subcommand("chains", "number of saturated chains in the Hasse diagram");
    chains->add_option("--from", from, "lower word")->required();
    chains->add_option("--to", to, "upper word")->required();

    auto* covers = app.add_subcommand("covers", "upper (or lower) covers of a word");
    covers->add_option("--word", word)->required();
    covers->add_flag("--down", down, "list lower covers instead");

    auto* order = app.add_subcommand("order", "lattice order test w <= v");
    order->add_option("--left", left)->required();
    order->add_option("--right", right)->required();

    auto* fcoef = app.add_subcommand("fcoef", "coefficients F(w, v, .)");
    fcoef->add_option("--from", from)->capture_default_str();
    fcoef->add_option("--to", to)->required();

    auto* qpoly = app.add_subcommand("qpoly", "boundary polynomial Q_{w,v}(p)");
    qpoly->add_option("--from", from)->capture_default_str();
    qpoly->add_option("--to", to)->required();
    qpoly->add_option("--eval", eval_text, "evaluate at p = a/b");

    auto add_measure_opts = [&](CLI::App* sub) {
        sub->add_option("--tail", tail, "tail word (e or starting with 2)")->required();
        sub->add_option("--p", p_text, "p in (0, 1] as a/b")->required();
        sub->add_option("--K", k, "maximum number of twos")->required();
    };

    auto* measure = app.add_subcommand("measure", "exact measure of the cylinder through (w, l)");
    add_measure_opts(measure);
    measure->add_option("--word", word)->required();
    measure->add_option("--level", level)->required();

    auto* levelmass = app.add_subcommand("levelmass", "truncated total mass of one level");
    add_measure_opts(levelmass);
    levelmass->add_option("--level", level)->required();
    levelmass->add_option("--max-len", max_len)->required();
    levelmass->add_option("--format", format_text, "json | plain");

    auto* converge = app.add_subcommand("converge", "prelimit values along a vertex schedule");
    add_measure_opts(converge);
    converge->add_option("--word", word)->required();
    converge->add_option("--level", level)->required();
    converge->add_option("--m", m_text, "comma-separated schedule indices")->required();
    converge->add_option("--prefix", prefix, "fixed word in front of the ones run")
        ->capture_default_str();
    converge->add_option("--format", format_text, "csv | plain");

    auto* sample = app.add_subcommand("sample", "draw one path from a central measure");
    add_measure_opts(sample);
    sample->add_option("--levels", levels)->required();
    sample->add_option("--seed", seed)->required();
    sample->add_option("--tol", tol_text, "truncation tolerance a/b")->required();
    sample->add_option("--max-len", max_len, "longest candidate word")->capture_default_str();

    auto* graph = app.add_subcommand("graph", "Hasse diagram of YF^K in DOT");
    graph->add_option("--max-rank", max_rank)->required();
    graph->add_option("--K", k)->required();
    graph->add_option("--format", format_text, "dot");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        auto format_or = [&](OutputFormat fallback) {
            return format_text.empty() ? fallback : parse_output_format(format_text);
        };

        if (count->parsed()) {
            out << jump_paths(Word::parse(from), Word::parse(to), steps, parse_count_method(method))
                << '\n';
        } else if (chains->parsed()) {
            out << chains_saturated(Word::parse(from), Word::parse(to)) << '\n';
        } else if (covers->parsed()) {
            const Word v = Word::parse(word);
            out << join_words(down ? covers_down(v) : covers_up(v)) << '\n';
        } else if (order->parsed()) {
            out << (leq(Word::parse(left), Word::parse(right)) ? "true" : "false") << '\n';
        } else if (fcoef->parsed()) {
            const FVector f = f_gen(Word::parse(from), Word::parse(to));
            out << '[';
            for (std::size_t i = 0; i < f.coeffs.size(); ++i) out << (i ? ", " : "") << f.coeffs[i];
            out << "]\n";
        } else if (qpoly->parsed()) {
            const Poly q = q_gen(Word::parse(from), Word::parse(to));
            out << q.to_string() << '\n' << q.to_array_string() << '\n';
            if (!eval_text.empty()) out << rational_line(q.eval(parse_rational(eval_text))) << '\n';
        } else if (measure->parsed()) {
            CentralMeasure m(measure_params(k, tail, p_text));
            out << rational_line(m.mu(Word::parse(word), level)) << '\n';
        } else if (levelmass->parsed()) {
            const OutputFormat fmt = format_or(OutputFormat::json);
            require_format(fmt, {OutputFormat::json, OutputFormat::plain}, "levelmass");
            if (level == 0) throw ValidationError("--level must be at least 1");
            CentralMeasure m(measure_params(k, tail, p_text));
            const BigRat mass = m.level_mass(level, max_len);
            if (fmt == OutputFormat::plain) {
                out << rational_line(mass) << '\n';
            } else {
                nlohmann::ordered_json words = nlohmann::ordered_json::object();
                for (const Word& w : m.support(max_len)) words[w.str()] = format_rational(m.mu(w, level));
                nlohmann::ordered_json doc;
                doc["tail"] = m.params().tail.str();
                doc["p"] = format_rational(m.params().p);
                doc["K"] = k;
                doc["level"] = level;
                doc["max_len"] = max_len;
                doc["mass"] = format_rational(mass);
                doc["mass_float"] = format_float(mass);
                doc["deficit_float"] = format_float(BigRat(1 - mass));
                doc["words"] = std::move(words);
                out << doc.dump(2) << '\n';
            }
        } else if (converge->parsed()) {
            const OutputFormat fmt = format_or(OutputFormat::csv);
            require_format(fmt, {OutputFormat::csv, OutputFormat::plain}, "converge");
            const auto params = measure_params(k, tail, p_text);
            if (params.p == 1) throw ValidationError("converge requires p < 1");
            const auto ms = parse_m_list(m_text);
            const auto rows = convergence_table(params, Word::parse(word), level, ms, Word::parse(prefix));
            if (fmt == OutputFormat::csv) out << "m,n_m,value_num,value_den,abs_error_float\n";
            for (const auto& r : rows) {
                if (fmt == OutputFormat::csv)
                    out << r.m << ',' << r.n_m << ',' << r.value.get_num() << ',' << r.value.get_den()
                        << ',' << format_float(r.abs_error) << '\n';
                else
                    out << "m=" << r.m << " n_m=" << r.n_m << " value=" << rational_line(r.value)
                        << " abs_error=" << format_float(r.abs_error) << '\n';
            }
        } else if (sample->parsed()) {
            const auto params = measure_params(k, tail, p_text);
            if (params.p == 1) throw ValidationError("sample requires p < 1");
            PathSampler sampler(params, parse_rational(tol_text), max_len);
            out << join_words(sampler.sample(levels, seed)) << '\n';
        } else if (graph->parsed()) {
            require_format(format_or(OutputFormat::dot), {OutputFormat::dot}, "graph");
            out << hasse_dot(max_rank, k);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace yf
