#include "pfsp/io.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <iterator>
#include <numeric>
#include <ostream>
#include <sstream>

namespace pfsp {

namespace {

/// Line reader that tracks the line number for error messages.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::string& line)
    {
        if (!std::getline(in_, line)) {
            return false;
        }
        ++line_no_;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        return true;
    }

    std::string expect(const char* what)
    {
        std::string line;
        if (!next(line)) {
            throw ParseError(line_no_ + 1, std::string("unexpected end of input, expected ") + what);
        }
        return line;
    }

    std::size_t line_no() const noexcept { return line_no_; }

private:
    std::istream& in_;
    std::size_t line_no_ = 0;
};

template <typename T>
T parse_integer(std::string_view token, std::size_t line_no)
{
    T value{};
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError(line_no, "invalid integer '" + std::string(token) + "'");
    }
    return value;
}

double parse_real(std::string_view token, std::size_t line_no)
{
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError(line_no, "invalid number '" + std::string(token) + "'");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = text.find(sep, start);
        out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            return out;
        }
        start = pos + 1;
    }
}

std::vector<std::string_view> tokens(std::string_view text)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) {
            ++i;
        }
        const std::size_t start = i;
        while (i < text.size() && text[i] != ' ' && text[i] != '\t') {
            ++i;
        }
        if (i > start) {
            out.push_back(text.substr(start, i - start));
        }
    }
    return out;
}

bool skippable(std::string_view line)
{
    const auto first = line.find_first_not_of(" \t");
    return first == std::string_view::npos || line[first] == '#';
}

void write_permutation(std::ostream& out, std::span<const Job> perm)
{
    for (std::size_t i = 0; i < perm.size(); ++i) {
        out << (i ? " " : "") << perm[i] + 1;
    }
}

Permutation parse_permutation(std::string_view field, std::size_t line_no)
{
    Permutation perm;
    for (auto tok : tokens(field)) {
        const auto label = parse_integer<std::uint64_t>(tok, line_no);
        if (label == 0) {
            throw ParseError(line_no, "job labels start at 1");
        }
        perm.push_back(static_cast<Job>(label - 1));
    }
    if (!is_valid_permutation(perm, perm.size())) {
        throw ParseError(line_no, "job sequence is not a permutation");
    }
    return perm;
}

void write_objectives(std::ostream& out, const ObjectiveVector& obj)
{
    for (std::size_t k = 0; k < obj.size(); ++k) {
        out << (k ? "\t" : "") << obj[k];
    }
}

ObjectiveVector parse_objectives(std::span<const std::string_view> fields, std::size_t line_no)
{
    ObjectiveVector obj;
    for (auto f : fields) {
        obj.values.push_back(parse_integer<Time>(f, line_no));
    }
    return obj;
}

Solution parse_solution(std::string_view line, std::size_t line_no)
{
    auto fields = split(line, '\t');
    if (fields.size() < 2) {
        throw ParseError(line_no, "expected objective values and a permutation separated by tabs");
    }
    Solution s;
    s.obj = parse_objectives(std::span(fields).first(fields.size() - 1), line_no);
    s.perm = parse_permutation(fields.back(), line_no);
    return s;
}

/// Splits "key<TAB>value" and checks the key.
std::string_view keyed_value(std::string_view line, std::string_view key, std::size_t line_no)
{
    const auto tab = line.find('\t');
    if (line.substr(0, tab) != key) {
        throw ParseError(line_no, "expected field '" + std::string(key) + "'");
    }
    return tab == std::string_view::npos ? std::string_view{} : line.substr(tab + 1);
}

}  // namespace

std::string format_double(double value)
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

void write_solutions(std::ostream& out, std::span<const Solution> solutions)
{
    for (const auto& s : solutions) {
        write_objectives(out, s.obj);
        out << '\t';
        write_permutation(out, s.perm);
        out << '\n';
    }
}

std::vector<Solution> read_solutions(std::istream& in)
{
    LineReader reader(in);
    std::vector<Solution> out;
    std::string line;
    while (reader.next(line)) {
        if (!skippable(line)) {
            out.push_back(parse_solution(line, reader.line_no()));
        }
    }
    return out;
}

void write_archive(std::ostream& out, const ParetoArchive& archive)
{
    const auto snapshot = archive.snapshot();
    write_solutions(out, snapshot);
}

void write_points(std::ostream& out, std::span<const ObjectiveVector> points)
{
    for (const auto& p : points) {
        write_objectives(out, p);
        out << '\n';
    }
}

void write_front(std::ostream& out, const Front& front)
{
    for (const auto& p : front) {
        for (std::size_t k = 0; k < p.size(); ++k) {
            out << (k ? "\t" : "") << format_double(p[k]);
        }
        out << '\n';
    }
}

Front read_front(std::istream& in)
{
    if (in.peek() == 'i') {
        std::string head;
        std::getline(in, head);
        if (head.rfind("instance\t", 0) == 0) {
            std::istringstream rest(head + "\n" + std::string(std::istreambuf_iterator<char>(in), {}));
            const RunResult run = read_run_result(rest);
            if (run.front.empty()) {
                throw ParseError(1, "run record holds an empty front");
            }
            return to_front(run.front);
        }
        throw ParseError(1, "invalid number '" + head.substr(0, head.find_first_of(" \t")) + "'");
    }
    LineReader reader(in);
    Front front;
    std::string line;
    while (reader.next(line)) {
        if (skippable(line)) {
            continue;
        }
        std::vector<std::string_view> fields;
        if (auto tabbed = split(line, '\t'); tabbed.size() >= 3) {
            tabbed.pop_back();
            fields = std::move(tabbed);
        } else {
            fields = tokens(line);
        }
        Point p;
        for (auto f : fields) {
            p.push_back(parse_real(f, reader.line_no()));
        }
        if (!front.empty() && p.size() != front.front().size()) {
            throw ParseError(reader.line_no(), "objective count differs from previous lines");
        }
        front.push_back(std::move(p));
    }
    if (front.empty()) {
        throw ParseError(reader.line_no(), "front holds no points");
    }
    return front;
}

void write_run_result(std::ostream& out, const RunResult& r)
{
    out << "instance\t" << r.instance << '\n';
    out << "algorithm\t" << r.algorithm << '\n';
    out << "seed\t" << r.seed << '\n';
    out << "budget\t" << r.budget << '\n';
    out << "evaluations_used\t" << r.evaluations_used << '\n';
    out << "descent_lengths\t";
    for (std::size_t i = 0; i < r.descent_lengths.size(); ++i) {
        out << (i ? " " : "") << r.descent_lengths[i];
    }
    out << '\n';
    out << "front\t" << r.front.size() << '\n';
    write_solutions(out, r.front);
    out << "trajectory\t" << r.trajectory.size() << '\n';
    write_points(out, r.trajectory);
    out << "local_optima\t" << r.local_optima.size() << '\n';
    for (const auto& perm : r.local_optima) {
        write_permutation(out, perm);
        out << '\n';
    }
}

RunResult read_run_result(std::istream& in)
{
    LineReader reader(in);
    RunResult r;
    auto field = [&](std::string_view key) {
        const std::string line = reader.expect(std::string(key).c_str());
        return std::string(keyed_value(line, key, reader.line_no()));
    };
    auto count = [&](std::string_view key) { return parse_integer<std::size_t>(field(key), reader.line_no()); };

    r.instance = field("instance");
    r.algorithm = field("algorithm");
    r.seed = parse_integer<std::uint64_t>(field("seed"), reader.line_no());
    r.budget = parse_integer<std::uint64_t>(field("budget"), reader.line_no());
    r.evaluations_used = parse_integer<std::uint64_t>(field("evaluations_used"), reader.line_no());
    const std::string lengths = field("descent_lengths");
    for (auto tok : tokens(lengths)) {
        r.descent_lengths.push_back(parse_integer<std::uint64_t>(tok, reader.line_no()));
    }
    for (std::size_t i = 0, n = count("front"); i < n; ++i) {
        r.front.push_back(parse_solution(reader.expect("front line"), reader.line_no()));
    }
    for (std::size_t i = 0, n = count("trajectory"); i < n; ++i) {
        const std::string line = reader.expect("trajectory line");
        r.trajectory.push_back(parse_objectives(split(line, '\t'), reader.line_no()));
    }
    for (std::size_t i = 0, n = count("local_optima"); i < n; ++i) {
        r.local_optima.push_back(parse_permutation(reader.expect("local optimum"), reader.line_no()));
    }
    return r;
}

void write_metric_report(std::ostream& out, const MetricReport& report)
{
    out << "d1\t" << format_double(report.d1) << '\n';
    out << "d2\t" << format_double(report.d2) << '\n';
    out << "reference_size\t" << report.reference_size << '\n';
    out << "approx_size\t" << report.approx_size << '\n';
}

MetricReport read_metric_report(std::istream& in)
{
    LineReader reader(in);
    MetricReport report;
    auto field = [&](std::string_view key) {
        const std::string line = reader.expect(std::string(key).c_str());
        return std::string(keyed_value(line, key, reader.line_no()));
    };
    report.d1 = parse_real(field("d1"), reader.line_no());
    report.d2 = parse_real(field("d2"), reader.line_no());
    report.reference_size = parse_integer<std::size_t>(field("reference_size"), reader.line_no());
    report.approx_size = parse_integer<std::size_t>(field("approx_size"), reader.line_no());
    return report;
}

std::string format_metrics(const MetricReport& report)
{
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%.4f %.4f", report.d1, report.d2);
    return buf;
}

double DescentReport::mean() const
{
    if (counts.empty()) {
        return 0.0;
    }
    const double total = std::accumulate(counts.begin(), counts.end(), 0.0,
                                         [](double acc, std::uint64_t c) { return acc + static_cast<double>(c); });
    return total / static_cast<double>(counts.size());
}

void write_descent_report(std::ostream& out, const DescentReport& report)
{
    char mean[64];
    std::snprintf(mean, sizeof(mean), "%.1f", report.mean());
    out << "instance\tn\tmean_evaluations\n";
    out << report.instance << '\t' << report.jobs << '\t' << mean << '\n';
    out << "seed\t" << report.seed << '\n';
    out << "repetition\tevaluations\n";
    for (std::size_t i = 0; i < report.counts.size(); ++i) {
        out << i + 1 << '\t' << report.counts[i] << '\n';
    }
}

DescentReport read_descent_report(std::istream& in)
{
    LineReader reader(in);
    DescentReport report;
    if (reader.expect("table header") != "instance\tn\tmean_evaluations") {
        throw ParseError(reader.line_no(), "expected descent table header");
    }
    {
        const std::string line = reader.expect("table row");
        auto fields = split(line, '\t');
        if (fields.size() != 3) {
            throw ParseError(reader.line_no(), "expected instance, n and mean");
        }
        report.instance = std::string(fields[0]);
        report.jobs = parse_integer<std::size_t>(fields[1], reader.line_no());
        parse_real(fields[2], reader.line_no());
    }
    {
        const std::string line = reader.expect("seed");
        report.seed = parse_integer<std::uint64_t>(keyed_value(line, "seed", reader.line_no()), reader.line_no());
    }
    if (reader.expect("count header") != "repetition\tevaluations") {
        throw ParseError(reader.line_no(), "expected repetition header");
    }
    std::string line;
    while (reader.next(line)) {
        if (skippable(line)) {
            continue;
        }
        auto fields = split(line, '\t');
        if (fields.size() != 2 ||
            parse_integer<std::size_t>(fields[0], reader.line_no()) != report.counts.size() + 1) {
            throw ParseError(reader.line_no(), "expected '<repetition><TAB><evaluations>' in sequence");
        }
        report.counts.push_back(parse_integer<std::uint64_t>(fields[1], reader.line_no()));
    }
    return report;
}

}  // namespace pfsp
