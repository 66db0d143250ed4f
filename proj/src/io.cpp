#include "jscheme/io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace jscheme {

using nlohmann::json;

void write_rainbow_json(std::ostream& os, const Rainbow& x) {
    const int n = x.order();
    os << "{\"order\": " << n << ", \"rank\": " << x.rank() << ", \"colors\": [";
    for (int a = 0; a < n; ++a) {
        if (a) os << ", ";
        os << '[';
        for (int b = 0; b < n; ++b) {
            if (b) os << ',';
            os << x.color(a, b);
        }
        os << ']';
    }
    os << "]}\n";
}

std::string rainbow_json(const Rainbow& x) {
    std::ostringstream os;
    write_rainbow_json(os, x);
    return os.str();
}

void write_rainbow_text(std::ostream& os, const Rainbow& x) {
    const int n = x.order();
    os << n << ' ' << x.rank() << '\n';
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (b) os << ' ';
            os << x.color(a, b);
        }
        os << '\n';
    }
}

namespace {

Rainbow finish_load(const std::vector<std::vector<long long>>& matrix, long long declared_rank,
                    std::ostream& warn) {
    Rainbow x = Rainbow::from_colors(matrix);
    if (declared_rank != x.rank())
        throw NotARainbow("declared rank " + std::to_string(declared_rank) + " but " +
                          std::to_string(x.rank()) + " colors occur");
    bool canonical = true;
    const int n = x.order();
    for (int a = 0; a < n && canonical; ++a)
        for (int b = 0; b < n; ++b)
            if (matrix[a][b] != x.color(a, b)) {
                canonical = false;
                break;
            }
    if (!canonical) warn << "warning: colors were not canonically numbered; renumbered on load\n";
    return x;
}

Rainbow read_rainbow_json_stream(std::istream& is, std::ostream& warn) {
    json j;
    try {
        is >> j;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("order") || !j.contains("rank") || !j.contains("colors"))
        throw ParseError("rainbow JSON needs order, rank and colors");
    long long order = 0, rank = 0;
    std::vector<std::vector<long long>> matrix;
    try {
        order = j.at("order").get<long long>();
        rank = j.at("rank").get<long long>();
        matrix = j.at("colors").get<std::vector<std::vector<long long>>>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad rainbow JSON: ") + e.what());
    }
    if (order <= 0 || (long long)matrix.size() != order)
        throw ParseError("colors matrix does not match the declared order");
    return finish_load(matrix, rank, warn);
}

Rainbow read_rainbow_text_stream(std::istream& is, std::ostream& warn) {
    long long n = 0, r = 0;
    if (!(is >> n >> r) || n <= 0) throw ParseError("text rainbow needs a header line \"n r\"");
    std::vector<std::vector<long long>> matrix(size_t(n), std::vector<long long>(size_t(n)));
    for (long long a = 0; a < n; ++a)
        for (long long b = 0; b < n; ++b)
            if (!(is >> matrix[a][b])) throw ParseError("text rainbow is truncated");
    return finish_load(matrix, r, warn);
}

}  // namespace

Rainbow read_rainbow(std::istream& is, std::ostream& warn) {
    int ch = is.peek();
    while (ch == ' ' || ch == '\n' || ch == '\r' || ch == '\t') {
        is.get();
        ch = is.peek();
    }
    if (ch == '{') return read_rainbow_json_stream(is, warn);
    return read_rainbow_text_stream(is, warn);
}

Rainbow read_rainbow_file(const std::string& path, std::ostream& warn) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_rainbow(in, warn);
}

void write_rainbow_file(const std::string& path, const Rainbow& x) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".txt")
        write_rainbow_text(out, x);
    else
        write_rainbow_json(out, x);
}

void write_tensor(std::ostream& os, const IntersectionTensor& t) {
    os << "doubled=" << (t.kind == TensorKind::Jordan ? "true" : "false") << '\n';
    for (int f = 0; f < t.rank; ++f)
        for (int c = 0; c < t.rank; ++c)
            for (int d = 0; d < t.rank; ++d)
                os << f << ' ' << c << ' ' << d << ' ' << t.at(f, c, d) << '\n';
}

void write_closure_report(std::ostream& os, const ClosureReport& rep) {
    os << "{\"kind\": \"" << (rep.kind == ClosureKind::WL ? "wl" : "jordan")
       << "\", \"rounds\": " << rep.rounds << ", \"rank_history\": [";
    for (size_t i = 0; i < rep.rank_history.size(); ++i) {
        if (i) os << ',';
        os << rep.rank_history[i];
    }
    os << "], \"result\": ";
    std::string inner = rainbow_json(rep.result);
    inner.pop_back();  // inner newline
    os << inner << "}\n";
}

void write_properness_report(std::ostream& os, const PropernessReport& rep) {
    os << "{\"proper\": " << (rep.proper ? "true" : "false")
       << ", \"jordan_rank\": " << rep.jordan_rank
       << ", \"symmetrized_wl_rank\": " << rep.symmetrized_wl_rank << ", \"witness_color\": ";
    if (rep.witness_color)
        os << *rep.witness_color;
    else
        os << "null";
    os << "}\n";
}

void write_structure_report(std::ostream& os, const Rainbow& x, const StructureReport& rep) {
    os << "{\"order\": " << x.order() << ", \"rank\": " << x.rank()
       << ", \"symmetric\": " << (rep.symmetric ? "true" : "false")
       << ", \"homogeneous\": " << (rep.homogeneous ? "true" : "false")
       << ", \"regular\": " << (rep.regular ? "true" : "false") << ", \"valencies\": [";
    for (size_t c = 0; c < rep.valencies.size(); ++c) {
        if (c) os << ',';
        if (rep.valencies[c])
            os << *rep.valencies[c];
        else
            os << "null";
    }
    os << "], \"fibers\": " << x.fibers().size() << "}\n";
}

WfdfSpec read_wfdf_spec(std::istream& is) {
    json j;
    try {
        is >> j;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    WfdfSpec spec;
    try {
        spec.d = j.at("d").get<int>();
        spec.diamond = DiamondTable::from_rows(j.at("diamond").get<std::vector<std::vector<int>>>());
        for (const auto& p : j.at("sigma")) {
            auto v = p.get<std::vector<int>>();
            if (v.size() != 3) throw ParseError("sigma entries must be length-3 arrays");
            spec.sigma.push_back(Perm3{uint8_t(v[0]), uint8_t(v[1]), uint8_t(v[2])});
        }
        for (const auto& t : j.at("theta")) {
            auto s = t.get<std::string>();
            if (s != "+" && s != "-") throw ParseError("theta entries must be \"+\" or \"-\"");
            spec.theta_plus.push_back(s == "+");
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad spec JSON: ") + e.what());
    }
    spec.validate();
    return spec;
}

void write_wfdf_spec(std::ostream& os, const WfdfSpec& spec) {
    os << "{\"d\": " << spec.d << ", \"diamond\": [";
    const int sz = spec.diamond.size();
    for (int a = 0; a < sz; ++a) {
        if (a) os << ", ";
        os << '[';
        for (int b = 0; b < sz; ++b) {
            if (b) os << ',';
            os << spec.diamond.apply(a, b);
        }
        os << ']';
    }
    os << "], \"sigma\": [";
    for (size_t i = 0; i < spec.sigma.size(); ++i) {
        if (i) os << ", ";
        os << '[' << int(spec.sigma[i][0]) << ',' << int(spec.sigma[i][1]) << ','
           << int(spec.sigma[i][2]) << ']';
    }
    os << "], \"theta\": [";
    for (size_t i = 0; i < spec.theta_plus.size(); ++i) {
        if (i) os << ", ";
        os << '"' << (spec.theta_plus[i] ? '+' : '-') << '"';
    }
    os << "]}\n";
}

CoverSpec read_cover_spec(std::istream& is) {
    json j;
    try {
        is >> j;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    CoverSpec spec;
    try {
        spec.q = j.at("q").get<int>();
        spec.m = j.at("m").get<int>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad cover spec: ") + e.what());
    }
    return spec;
}

}  // namespace jscheme
