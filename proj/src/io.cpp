#include "linterp/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace linterp {
namespace {

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("io: cannot open " + path);
    return in;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("io: cannot write " + path);
    return out;
}

}  // namespace

std::string modulus_token(const std::vector<uint8_t>& modulus) {
    std::string s;
    for (size_t i = 0; i < modulus.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(modulus[i]);
    }
    return s;
}

std::vector<uint8_t> parse_modulus(const std::string& token) {
    std::vector<uint8_t> c;
    std::stringstream ss(token);
    std::string part;
    while (std::getline(ss, part, ','))
        c.push_back(static_cast<uint8_t>(std::stoul(part)));
    return c;
}

CodeDescriptor read_code(const std::string& path) {
    std::ifstream in = open_in(path);
    std::string kind;
    in >> kind;
    if (kind == "gabidulin" || kind == "kk") {
        uint32_t q, m;
        std::string mod;
        int n, k;
        in >> q >> m >> mod >> n >> k;
        auto field = Field::make(q, m, parse_modulus(mod));
        std::vector<FieldElement> pts;
        for (int i = 0; i < n; ++i) {
            std::string tok;
            in >> tok;
            pts.emplace_back(field.get(), field->parse(tok));
        }
        if (!in) throw std::runtime_error("io: truncated descriptor " + path);
        if (kind == "gabidulin") return GabidulinCode(field, n, k, std::move(pts));
        return KKCode(field, n, k, std::move(pts));
    }
    if (kind == "mv") {
        uint32_t q;
        int m, l, k, L;
        std::string gamma_tok, mod;
        in >> q >> m >> l >> k >> L >> gamma_tok >> mod;
        if (!in) throw std::runtime_error("io: truncated descriptor " + path);
        std::vector<uint8_t> modulus = parse_modulus(mod);
        Field probe(q, static_cast<uint32_t>(m) * l, modulus);
        return MVCode(q, m, l, k, L, modulus, probe.parse(gamma_tok));
    }
    throw std::runtime_error("io: unknown code kind '" + kind + "' in " + path);
}

void write_code(const std::string& path, const CodeDescriptor& code) {
    std::ofstream out = open_out(path);
    if (const auto* gab = std::get_if<GabidulinCode>(&code)) {
        out << "gabidulin " << gab->field()->q() << " " << gab->field()->m() << " "
            << modulus_token(gab->field()->modulus()) << " " << gab->n() << " "
            << gab->k();
        for (const auto& g : gab->eval_points()) out << " " << g.str();
        out << "\n";
    } else if (const auto* kk = std::get_if<KKCode>(&code)) {
        out << "kk " << kk->field()->q() << " " << kk->field()->m() << " "
            << modulus_token(kk->field()->modulus()) << " " << kk->l() << " "
            << kk->k();
        for (const auto& a : kk->alphas()) out << " " << a.str();
        out << "\n";
    } else {
        const auto& mv = std::get<MVCode>(code);
        out << "mv " << mv.q() << " " << mv.m() << " " << mv.l() << " " << mv.k()
            << " " << mv.list_size() << " " << mv.gamma().str() << "\n"
            << modulus_token(mv.big_field()->modulus()) << "\n";
    }
}

std::vector<FieldElement> read_vector(const std::string& path, const Field* f) {
    std::ifstream in = open_in(path);
    std::vector<FieldElement> v;
    std::string tok;
    while (in >> tok) v.emplace_back(f, f->parse(tok));
    return v;
}

void write_vector(const std::string& path, const std::vector<FieldElement>& v) {
    std::ofstream out = open_out(path);
    for (size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i].str();
    out << "\n";
}

std::vector<uint8_t> read_digits(const std::string& path) {
    std::ifstream in = open_in(path);
    std::vector<uint8_t> v;
    uint32_t d;
    while (in >> d) v.push_back(static_cast<uint8_t>(d));
    return v;
}

void write_digits(const std::string& path, const std::vector<uint8_t>& v) {
    std::ofstream out = open_out(path);
    for (size_t i = 0; i < v.size(); ++i)
        out << (i ? " " : "") << static_cast<uint32_t>(v[i]);
    out << "\n";
}

SubspaceBasis read_subspace(const std::string& path, uint32_t q) {
    std::ifstream in = open_in(path);
    size_t ambient, rank;
    in >> ambient >> rank;
    std::vector<std::vector<uint8_t>> rows;
    for (size_t r = 0; r < rank; ++r) {
        std::string digits;
        in >> digits;
        if (digits.size() != ambient)
            throw std::runtime_error("io: bad subspace row in " + path);
        std::vector<uint8_t> row;
        for (char c : digits) row.push_back(static_cast<uint8_t>(c - '0'));
        rows.push_back(row);
    }
    if (!in && rank > 0) throw std::runtime_error("io: truncated subspace " + path);
    return SubspaceBasis::span(q, ambient, rows);
}

void write_subspace(const std::string& path, const SubspaceBasis& s) {
    std::ofstream out = open_out(path);
    out << s.ambient() << " " << s.dim() << "\n";
    for (const auto& row : s.rows()) {
        for (uint8_t d : row) out << static_cast<char>('0' + d);
        out << "\n";
    }
}

}  // namespace linterp
