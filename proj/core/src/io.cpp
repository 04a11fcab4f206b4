#include "hopfd2/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hopfd2 {

namespace {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

constexpr const char* kFormat = "hopfd2";

// ---------------------------------------------------------------- writing

ojson scalar_json(const Scalar& s, const Field& f) {
    if (f.is_rational()) return s.str();
    return std::stoll(s.str());
}

ojson vector_json(const SVec& v, int n, const Field& f) {
    ojson a = ojson::array();
    for (auto& x : sv::to_dense(v, n)) a.push_back(scalar_json(x, f));
    return a;
}

ojson matrix_json(const Matrix& m, const Field& f) {
    ojson rows = ojson::array();
    for (auto& r : m.to_dense()) {
        ojson row = ojson::array();
        for (auto& x : r) row.push_back(scalar_json(x, f));
        rows.push_back(std::move(row));
    }
    return rows;
}

ojson algebra_json(const Algebra& a) {
    ojson j;
    j["dim"] = a.dim;
    j["unit"] = vector_json(a.unit, a.dim, a.field);
    j["mul"] = matrix_json(a.mul, a.field);
    return j;
}

ojson header(const std::string& kind, const std::string& name, const Field& f) {
    ojson j;
    j["format"] = kFormat;
    j["kind"] = kind;
    j["name"] = name;
    j["modulus"] = f.p;
    return j;
}

// Objects and nested arrays one entry per line, arrays of scalars inline.
void pretty(std::ostream& os, const ojson& j, int indent) {
    std::string pad(indent + 1, ' '), end(indent, ' ');
    if (j.is_object()) {
        os << "{\n";
        std::size_t k = 0;
        for (auto it = j.begin(); it != j.end(); ++it, ++k) {
            os << pad << ojson(it.key()).dump() << ": ";
            pretty(os, it.value(), indent + 1);
            os << (k + 1 < j.size() ? ",\n" : "\n");
        }
        os << end << "}";
        return;
    }
    bool flat = j.is_array();
    if (flat)
        for (auto& x : j) flat = flat && !x.is_structured();
    if (!j.is_array() || flat || j.empty()) {
        os << j.dump();
        return;
    }
    os << "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
        os << pad;
        pretty(os, j[k], indent + 1);
        os << (k + 1 < j.size() ? ",\n" : "\n");
    }
    os << end << "]";
}

std::string render(const ojson& j) {
    std::ostringstream os;
    pretty(os, j, 0);
    os << "\n";
    return os.str();
}

// ---------------------------------------------------------------- reading

class Reader {
public:
    explicit Reader(Field f) : f_(f) {}

    const json& at(const json& j, const std::string& key, const std::string& path) const {
        if (!j.is_object() || !j.contains(key)) throw ParseError(path + "/" + key, "missing field");
        return j.at(key);
    }

    Scalar scalar(const json& j, const std::string& path) const {
        try {
            if (j.is_number_integer()) {
                auto v = j.get<long long>();
                return Scalar::parse(std::to_string(v), f_.p);
            }
            if (j.is_string()) return Scalar::parse(j.get<std::string>(), f_.p);
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(path, std::string("bad scalar: ") + e.what());
        }
        throw ParseError(path, "expected a scalar as \"p/q\" or an integer");
    }

    SVec vector(const json& j, int n, const std::string& path) const {
        if (!j.is_array()) throw ParseError(path, "expected an array");
        if (static_cast<int>(j.size()) != n)
            throw ParseError(path, "expected " + std::to_string(n) + " entries, found " + std::to_string(j.size()));
        std::vector<Scalar> d;
        for (std::size_t k = 0; k < j.size(); ++k) d.push_back(scalar(j[k], path + "/" + std::to_string(k)));
        return sv::from_dense(d);
    }

    Matrix matrix(const json& j, int rows, int cols, const std::string& path) const {
        if (!j.is_array()) throw ParseError(path, "expected an array of rows");
        if (static_cast<int>(j.size()) != rows)
            throw ParseError(path, "expected " + std::to_string(rows) + " rows, found " + std::to_string(j.size()));
        Matrix m(rows, cols);
        for (int r = 0; r < rows; ++r) {
            std::string rp = path + "/" + std::to_string(r);
            SVec row = vector(j[r], cols, rp);
            for (auto& [c, x] : row) m.set(r, c, x);
        }
        return m;
    }

    int dim(const json& j, const std::string& path) const {
        const json& d = at(j, "dim", path);
        if (!d.is_number_integer() || d.get<long long>() < 1 || d.get<long long>() > 4096)
            throw ParseError(path + "/dim", "expected a positive dimension");
        return d.get<int>();
    }

    Algebra algebra(const json& j, const std::string& path) const {
        Algebra a;
        a.field = f_;
        a.dim = dim(j, path);
        a.unit = vector(at(j, "unit", path), a.dim, path + "/unit");
        a.mul = matrix(at(j, "mul", path), a.dim, a.dim * a.dim, path + "/mul");
        return a;
    }

private:
    Field f_;
};

Field read_field(const json& doc) {
    if (!doc.contains("modulus")) return Field{};
    const json& m = doc.at("modulus");
    if (!m.is_number_unsigned() && !m.is_number_integer()) throw ParseError("/modulus", "expected an integer");
    long long p = m.get<long long>();
    if (p < 0) throw ParseError("/modulus", "expected 0 or a prime");
    if (p == 0) return Field{};
    if (p < 2) throw ParseError("/modulus", "expected 0 or a prime");
    for (long long q = 2; q * q <= p; ++q)
        if (p % q == 0) throw ParseError("/modulus", std::to_string(p) + " is not prime");
    return Field{static_cast<std::uint64_t>(p)};
}

FrobeniusExtension read_extension(const Reader& rd, const json& doc, const std::string& name) {
    FrobeniusExtension e;
    e.name = name;
    e.N = rd.algebra(rd.at(doc, "N", ""), "/N");
    e.M = rd.algebra(rd.at(doc, "M", ""), "/M");
    e.incl = rd.matrix(rd.at(doc, "incl", ""), e.M.dim, e.N.dim, "/incl");
    e.phi = rd.matrix(rd.at(doc, "phi", ""), e.N.dim, e.M.dim, "/phi");
    const json& db = rd.at(doc, "dual_basis", "");
    if (!db.is_array()) throw ParseError("/dual_basis", "expected an array");
    for (std::size_t k = 0; k < db.size(); ++k) {
        std::string p = "/dual_basis/" + std::to_string(k);
        e.dual_basis.emplace_back(rd.vector(rd.at(db[k], "x", p), e.M.dim, p + "/x"),
                                  rd.vector(rd.at(db[k], "y", p), e.M.dim, p + "/y"));
    }
    return e;
}

HopfExample read_hopf(const Reader& rd, const json& doc, const std::string& name) {
    HopfExample ex;
    HopfAlgebroid& h = ex.hopf;
    h.name = name;
    Algebra A = rd.algebra(rd.at(doc, "A", ""), "/A");
    int d = A.dim;
    auto side = [&](const char* key, Algebra& base, Matrix& s, Matrix& t, Matrix& gamma, Matrix& pi) {
        std::string p = std::string("/") + key;
        const json& j = rd.at(doc, key, "");
        base = rd.algebra(rd.at(j, "base", p), p + "/base");
        int n = base.dim;
        s = rd.matrix(rd.at(j, "s", p), d, n, p + "/s");
        t = rd.matrix(rd.at(j, "t", p), d, n, p + "/t");
        gamma = rd.matrix(rd.at(j, "gamma", p), d * d, d, p + "/gamma");
        pi = rd.matrix(rd.at(j, "pi", p), n, d, p + "/pi");
    };
    h.left.A = A;
    h.right.A = A;
    side("left", h.left.L, h.left.s, h.left.t, h.left.gamma, h.left.pi);
    side("right", h.right.R, h.right.s, h.right.t, h.right.gamma, h.right.pi);
    h.S = rd.matrix(rd.at(doc, "S", ""), d, d, "/S");
    h.S_inv = rd.matrix(rd.at(doc, "S_inv", ""), d, d, "/S_inv");
    ex.integral = rd.vector(rd.at(doc, "integral", ""), d, "/integral");
    return ex;
}

}  // namespace

Document parse_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        std::string msg = e.what();
        auto pos = msg.find("at line");
        std::string where = pos == std::string::npos ? "byte " + std::to_string(e.byte) : msg.substr(pos + 3);
        where = where.substr(0, where.find(':'));
        throw ParseError(where, "syntax error: " + msg);
    }
    if (!doc.is_object()) throw ParseError("/", "expected an object");
    if (!doc.contains("format") || doc.at("format") != kFormat)
        throw ParseError("/format", std::string("expected \"") + kFormat + "\"");
    Document d;
    d.field = read_field(doc);
    if (doc.contains("name")) {
        if (!doc.at("name").is_string()) throw ParseError("/name", "expected a string");
        d.name = doc.at("name").get<std::string>();
    }
    Reader rd(d.field);
    const json& kind = rd.at(doc, "kind", "");
    if (kind == "extension") d.extension = read_extension(rd, doc, d.name);
    else if (kind == "hopf") d.hopf = read_hopf(rd, doc, d.name);
    else throw ParseError("/kind", "expected \"extension\" or \"hopf\"");
    return d;
}

Document read_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, "cannot open file");
    std::ostringstream os;
    os << in.rdbuf();
    return parse_document(os.str());
}

std::string emit_document(const FrobeniusExtension& e) {
    const Field& f = e.M.field;
    ojson doc = header("extension", e.name, f);
    doc["N"] = algebra_json(e.N);
    doc["M"] = algebra_json(e.M);
    doc["incl"] = matrix_json(e.incl, f);
    doc["phi"] = matrix_json(e.phi, f);
    ojson db = ojson::array();
    for (auto& [x, y] : e.dual_basis) {
        ojson t;
        t["x"] = vector_json(x, e.M.dim, f);
        t["y"] = vector_json(y, e.M.dim, f);
        db.push_back(std::move(t));
    }
    doc["dual_basis"] = db;
    return render(doc);
}

std::string emit_document(const HopfExample& ex) {
    const HopfAlgebroid& h = ex.hopf;
    const Field& f = h.A().field;
    ojson doc = header("hopf", h.name, f);
    doc["A"] = algebra_json(h.A());
    auto side = [&](const Algebra& base, const Matrix& s, const Matrix& t, const Matrix& gamma, const Matrix& pi) {
        ojson j;
        j["base"] = algebra_json(base);
        j["s"] = matrix_json(s, f);
        j["t"] = matrix_json(t, f);
        j["gamma"] = matrix_json(gamma, f);
        j["pi"] = matrix_json(pi, f);
        return j;
    };
    doc["left"] = side(h.left.L, h.left.s, h.left.t, h.left.gamma, h.left.pi);
    doc["right"] = side(h.right.R, h.right.s, h.right.t, h.right.gamma, h.right.pi);
    doc["S"] = matrix_json(h.S, f);
    doc["S_inv"] = matrix_json(h.S_inv, f);
    doc["integral"] = vector_json(ex.integral, h.dim(), f);
    return render(doc);
}

std::string emit_document(const Document& d) {
    return d.extension ? emit_document(*d.extension) : emit_document(*d.hopf);
}

std::vector<std::string> catalog_names() {
    auto n = extension_names();
    for (auto& h : hopf_names()) n.push_back(h);
    return n;
}

Document catalog_document(const std::string& name, const Field& f) {
    Document d;
    d.name = name;
    d.field = f;
    if (is_extension_name(name)) d.extension = catalog_extension(name, f);
    else if (is_hopf_name(name)) d.hopf = catalog_hopf(name, f);
    else throw InputError("unknown catalog entry: " + name);
    return d;
}

}  // namespace hopfd2
