#include "pvar/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <sstream>

namespace pvar {

using nlohmann::json;

namespace {

// Dissection would silently sort; a permuted axis must be a hard error or
// the value table rows would no longer match their coordinates.
void require_increasing(const std::vector<double>& v, const char* axis) {
    for (size_t i = 1; i < v.size(); ++i)
        if (!(v[i] - v[i - 1] > Dissection::kTieTol))
            throw ParseError(std::string(axis) + " axis points must be strictly increasing");
}

double parse_field(const std::string& field, int line, int col) {
    try {
        size_t pos = 0;
        const double v = std::stod(field, &pos);
        while (pos < field.size() && std::isspace(static_cast<unsigned char>(field[pos]))) ++pos;
        if (pos != field.size()) throw std::invalid_argument("trailing junk");
        return v;
    } catch (const std::exception&) {
        throw ParseError("cannot parse number '" + field + "'", line, col);
    }
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    fields.push_back(cur);
    return fields;
}

GridFunction load_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        rows.push_back(split_csv_line(line));
    }
    if (rows.size() < 2 || rows[0].size() < 2)
        throw ParseError("CSV grid needs a header row and at least one data row", 1, 1);
    const size_t width = rows[0].size();
    std::vector<double> xs, ys;
    for (size_t i = 1; i < width; ++i)
        xs.push_back(parse_field(rows[0][i], 1, static_cast<int>(i + 1)));
    Eigen::MatrixXd v(static_cast<int>(width - 1), static_cast<int>(rows.size() - 1));
    for (size_t j = 1; j < rows.size(); ++j) {
        if (rows[j].size() != width)
            throw ParseError("row has " + std::to_string(rows[j].size()) + " fields, expected " +
                                 std::to_string(width),
                             static_cast<int>(j + 1), 1);
        ys.push_back(parse_field(rows[j][0], static_cast<int>(j + 1), 1));
        for (size_t i = 1; i < width; ++i)
            v(static_cast<int>(i - 1), static_cast<int>(j - 1)) =
                parse_field(rows[j][i], static_cast<int>(j + 1), static_cast<int>(i + 1));
    }
    if (!v.allFinite()) throw ParseError("non-finite value in grid");
    require_increasing(xs, "s");
    require_increasing(ys, "t");
    return {Dissection{std::move(xs)}, Dissection{std::move(ys)}, std::move(v)};
}

GridFunction load_json_grid(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!doc.contains("xs") || !doc.contains("ys") || !doc.contains("values"))
        throw ParseError("JSON grid needs xs, ys, values");
    std::vector<double> xs = doc["xs"].get<std::vector<double>>();
    std::vector<double> ys = doc["ys"].get<std::vector<double>>();
    const auto& rows = doc["values"];
    if (rows.size() != ys.size())
        throw ParseError("values has " + std::to_string(rows.size()) + " rows, expected " +
                         std::to_string(ys.size()));
    Eigen::MatrixXd v(static_cast<int>(xs.size()), static_cast<int>(ys.size()));
    for (size_t j = 0; j < rows.size(); ++j) {
        if (rows[j].size() != xs.size())
            throw ParseError("values row " + std::to_string(j) + " has " +
                             std::to_string(rows[j].size()) + " entries, expected " +
                             std::to_string(xs.size()));
        for (size_t i = 0; i < xs.size(); ++i)
            v(static_cast<int>(i), static_cast<int>(j)) = rows[j][i].get<double>();
    }
    if (!v.allFinite()) throw ParseError("non-finite value in grid");
    require_increasing(xs, "s");
    require_increasing(ys, "t");
    return {Dissection{std::move(xs)}, Dissection{std::move(ys)}, std::move(v)};
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}


}  // namespace

GridFunction load_grid_function(const std::string& path) {
    if (ends_with(path, ".csv")) return load_csv(path);
    if (ends_with(path, ".json")) return load_json_grid(path);
    throw ParseError("unknown grid format (want .csv or .json): " + path);
}

void save_grid_function(const std::string& path, const GridFunction& f) {
    if (ends_with(path, ".json")) {
        json doc;
        doc["xs"] = f.xs().points();
        doc["ys"] = f.ys().points();
        json rows = json::array();
        for (int j = 0; j < f.ny(); ++j) {
            json row = json::array();
            for (int i = 0; i < f.nx(); ++i) row.push_back(f.value(i, j));
            rows.push_back(std::move(row));
        }
        doc["values"] = std::move(rows);
        std::ofstream out(path);
        if (!out) throw ParseError("cannot write " + path);
        out << doc.dump(2) << "\n";
        return;
    }
    if (ends_with(path, ".csv")) {
        std::ofstream out(path);
        if (!out) throw ParseError("cannot write " + path);
        out << std::setprecision(17);
        for (int i = 0; i < f.nx(); ++i) out << "," << f.xs()[i];
        out << "\n";
        for (int j = 0; j < f.ny(); ++j) {
            out << f.ys()[j];
            for (int i = 0; i < f.nx(); ++i) out << "," << f.value(i, j);
            out << "\n";
        }
        return;
    }
    throw ParseError("unknown grid format (want .csv or .json): " + path);
}

RectPartition load_partition(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!doc.contains("target") || !doc.contains("rects"))
        throw ParseError("partition JSON needs target and rects");
    auto rect_of = [](const json& r) {
        if (!r.is_array() || r.size() != 4) throw ParseError("rectangle must be [a,b,c,d]");
        return Rect{r[0].get<double>(), r[1].get<double>(), r[2].get<double>(), r[3].get<double>()};
    };
    RectPartition p;
    p.target = rect_of(doc["target"]);
    for (const auto& r : doc["rects"]) p.rects.push_back(rect_of(r));
    return p;
}

json to_json(const Rect& r) { return json::array({r.a, r.b, r.c, r.d}); }

json to_json(const Dissection& d) { return json(d.points()); }

json to_json(const RectPartition& p) {
    json out;
    out["target"] = to_json(p.target);
    json rects = json::array();
    for (const Rect& r : p.rects) rects.push_back(to_json(r));
    out["rects"] = std::move(rects);
    return out;
}

json to_json(const CheckWitness& w) {
    if (std::holds_alternative<std::monostate>(w)) return nullptr;
    if (const auto* r = std::get_if<Rect>(&w)) return {{"rect", to_json(*r)}};
    if (const auto* d = std::get_if<Dissection>(&w)) return {{"dissection", to_json(*d)}};
    if (const auto* pr = std::get_if<std::pair<Dissection, Dissection>>(&w))
        return {{"dissection_x", to_json(pr->first)}, {"dissection_y", to_json(pr->second)}};
    return {{"partition", to_json(std::get<RectPartition>(w))}};
}

json to_json(const CheckRecord& c) {
    json out;
    out["name"] = c.name;
    out["lhs"] = c.lhs;
    out["rhs"] = c.rhs;
    out["constant"] = c.constant;
    out["slack"] = c.slack;
    out["pass"] = c.pass;
    out["witness"] = to_json(c.witness);
    return out;
}

json to_json(const InequalityReport& r) {
    json out;
    json checks = json::array();
    for (const CheckRecord& c : r.checks) checks.push_back(to_json(c));
    out["checks"] = std::move(checks);
    out["all_pass"] = r.all_pass();
    out["violations"] = r.violation_count();
    out["worst_slack"] = r.checks.empty() ? 0.0 : r.worst_slack();
    return out;
}

json to_json(const VariationResult& r) {
    json out;
    out["value"] = r.value;
    out["p"] = r.p;
    out["method"] = r.method == Method::exact ? "exact" : "heuristic";
    out["domain"] = to_json(r.domain);
    if (const auto* d = std::get_if<Dissection>(&r.witness))
        out["witness"] = {{"dissection", to_json(*d)}};
    else if (const auto* g = std::get_if<GridWitness>(&r.witness))
        out["witness"] = {{"dissection_x", to_json(g->dx)}, {"dissection_y", to_json(g->dy)}};
    else
        out["witness"] = {{"partition", to_json(std::get<PartitionWitness>(r.witness).partition)}};
    return out;
}

}  // namespace pvar
