#include "schub/io.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace schub {

namespace {

std::string strip(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

int parse_int(const std::string& s) {
    const std::string t = strip(s);
    if (t.empty()) throw parse_error("expected an integer");
    size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(t, &pos);
    } catch (const std::exception&) {
        throw parse_error("invalid integer: '" + t + "'");
    }
    if (pos != t.size()) throw parse_error("invalid integer: '" + t + "'");
    return v;
}

Diagram parse_grid(const std::string& text) {
    std::string normalized = text;
    std::replace(normalized.begin(), normalized.end(), '/', '\n');
    std::vector<Column> cols;
    std::istringstream is(normalized);
    std::string line;
    int row = 0;
    while (std::getline(is, line)) {
        ++row;
        line = strip(line);
        for (size_t j = 0; j < line.size(); ++j) {
            if (line[j] == '#') {
                if (cols.size() <= j) cols.resize(j + 1);
                cols[j].push_back(row);
            } else if (line[j] != '.') {
                throw parse_error("grid may contain only '#' and '.'");
            }
        }
    }
    return Diagram(std::move(cols));
}

Diagram parse_column_list(const std::string& text) {
    std::vector<Column> cols;
    for (const std::string& part : split(text, ';')) {
        const std::string t = strip(part);
        if (t.empty()) {
            continue; // empty column
        }
        Column col;
        for (const std::string& entry : split(t, ','))
            col.push_back(parse_int(entry));
        std::sort(col.begin(), col.end());
        if (std::adjacent_find(col.begin(), col.end()) != col.end())
            throw parse_error("column has a repeated row index");
        if (col.front() < 1) throw parse_error("row indices must be >= 1");
        cols.push_back(std::move(col));
    }
    return Diagram(std::move(cols));
}

} // namespace

Permutation parse_permutation(const std::string& text) {
    const std::string t = strip(text);
    if (t.empty()) throw parse_error("empty permutation");
    std::vector<int> word;
    if (t.find(',') != std::string::npos) {
        for (const std::string& part : split(t, ','))
            word.push_back(parse_int(part));
    } else {
        for (char c : t) {
            if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0')
                throw parse_error("permutation digits must be 1..9");
            word.push_back(c - '0');
        }
    }
    return Permutation(std::move(word));
}

RankSequence parse_rank_sequence(const std::string& text) {
    std::vector<int> d;
    for (const std::string& part : split(strip(text), ','))
        d.push_back(parse_int(part));
    return RankSequence(std::move(d));
}

Diagram parse_diagram_spec(const std::string& text) {
    const std::string t = strip(text);
    if (t.empty()) return Diagram();
    if (t.rfind("rothe:", 0) == 0)
        return rothe_diagram(parse_permutation(t.substr(6)));
    if (t.rfind("repeat:", 0) == 0) {
        const std::string rest = t.substr(7);
        const size_t x = rest.find('x');
        if (x == std::string::npos)
            throw parse_error("repeat spec must look like repeat:<m>x<spec>");
        const int m = parse_int(rest.substr(0, x));
        if (m < 1) throw parse_error("repeat multiplicity must be >= 1");
        std::string inner = strip(rest.substr(x + 1));
        if (!inner.empty() && inner.front() == '(' && inner.back() == ')')
            inner = inner.substr(1, inner.size() - 2);
        return repeat_columns(parse_diagram_spec(inner), m);
    }
    if (t.find('#') != std::string::npos || t.find('.') != std::string::npos)
        return parse_grid(t);
    return parse_column_list(t);
}

std::string column_list_string(const Diagram& d) {
    std::ostringstream os;
    bool first_col = true;
    for (const auto& col : d.columns()) {
        if (!first_col) os << ";";
        first_col = false;
        bool first = true;
        for (int r : col) {
            if (!first) os << ",";
            first = false;
            os << r;
        }
    }
    return os.str();
}

std::string grid_string(const Diagram& d) {
    const int rows = d.max_row();
    const int cols = d.column_count();
    std::vector<std::string> grid(rows, std::string(cols, '.'));
    for (int j = 0; j < cols; ++j)
        for (int r : d.columns()[j]) grid[r - 1][j] = '#';
    std::ostringstream os;
    for (int i = 0; i < rows; ++i) {
        if (i) os << "\n";
        os << grid[i];
    }
    return os.str();
}

json diagram_to_json(const Diagram& d) {
    json out = json::array();
    for (const auto& col : d.columns()) out.push_back(col);
    return out;
}

json polynomial_to_json(const Polynomial& f, int min_vars) {
    const int width = std::max(f.nvars(), min_vars);
    json out = json::array();
    for (const auto& [m, c] : f.sorted_terms()) {
        Monomial padded = m;
        padded.resize(width, 0);
        if (c > std::numeric_limits<long long>::max() ||
            c < std::numeric_limits<long long>::min())
            throw internal_error("coefficient exceeds JSON integer range");
        out.push_back(json{{"exp", padded}, {"coeff", static_cast<long long>(c)}});
    }
    return out;
}

Polynomial polynomial_from_json(const json& j) {
    Polynomial f;
    for (const auto& term : j) {
        Monomial m = term.at("exp").get<Monomial>();
        f.add_term(std::move(m), Int(term.at("coeff").get<long long>()));
    }
    return f;
}

Polynomial parse_polynomial(const std::string& text) {
    const std::string t = strip(text);
    if (t.empty() || t == "0") return Polynomial();
    Polynomial out;
    size_t pos = 0;
    const auto skip_ws = [&] {
        while (pos < t.size() && std::isspace(static_cast<unsigned char>(t[pos]))) ++pos;
    };
    int sign = 1;
    skip_ws();
    if (t[pos] == '-') {
        sign = -1;
        ++pos;
    } else if (t[pos] == '+') {
        ++pos;
    }
    while (pos < t.size()) {
        skip_ws();
        Int coeff = 1;
        bool saw_coeff = false;
        if (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) {
            std::string num;
            while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos])))
                num += t[pos++];
            coeff = Int(num);
            saw_coeff = true;
        }
        Monomial m;
        bool expect_factor = !saw_coeff;
        while (true) {
            skip_ws();
            if (pos < t.size() && t[pos] == '*') {
                ++pos;
                skip_ws();
                expect_factor = true;
            }
            if (pos >= t.size() || t[pos] != 'x') {
                if (expect_factor && !saw_coeff && m.empty())
                    throw parse_error("expected a term");
                break;
            }
            ++pos;
            std::string idx;
            while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos])))
                idx += t[pos++];
            if (idx.empty()) throw parse_error("expected a variable index");
            const int var = std::stoi(idx);
            int exp = 1;
            if (pos < t.size() && t[pos] == '^') {
                ++pos;
                std::string e;
                while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos])))
                    e += t[pos++];
                if (e.empty()) throw parse_error("expected an exponent");
                exp = std::stoi(e);
            }
            if (m.size() < static_cast<size_t>(var)) m.resize(var, 0);
            m[var - 1] += exp;
            expect_factor = false;
        }
        out.add_term(std::move(m), coeff * sign);
        skip_ws();
        if (pos >= t.size()) break;
        if (t[pos] == '+') {
            sign = 1;
        } else if (t[pos] == '-') {
            sign = -1;
        } else {
            throw parse_error("expected '+' or '-' between terms");
        }
        ++pos;
        skip_ws();
        if (pos >= t.size()) throw parse_error("dangling sign at end of polynomial");
    }
    return out;
}

} // namespace schub
