#include "spincavity/materials.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "spincavity/errors.hpp"

namespace spincavity {

Material Material::make_dielectric(std::string name, double eps_r,
                                   double tan_delta, std::string source) {
    Material m;
    m.name = std::move(name);
    m.kind = MaterialKind::dielectric;
    m.eps_r = eps_r;
    m.tan_delta = tan_delta;
    m.source = std::move(source);
    m.validate();
    return m;
}

Material Material::make_metal(std::string name, double r_surface,
                              std::string source) {
    Material m;
    m.name = std::move(name);
    m.kind = MaterialKind::metal;
    m.eps_r = 0.0;
    m.r_surface = r_surface;
    m.source = std::move(source);
    m.validate();
    return m;
}

void Material::validate() const {
    if (name.empty())
        throw DomainError("material name must not be empty");
    if (mu_r != 1.0)
        throw DomainError("material '" + name + "': only mu_r = 1 is supported");
    if (kind == MaterialKind::dielectric) {
        if (eps_r < 1.0)
            throw DomainError("material '" + name + "': eps_r must be >= 1");
        if (tan_delta < 0.0)
            throw DomainError("material '" + name + "': tan_delta must be >= 0");
        if (r_surface != 0.0)
            throw DomainError("material '" + name +
                              "': dielectric must not set r_surface");
    } else {
        if (r_surface <= 0.0)
            throw DomainError("material '" + name + "': metal needs r_surface > 0");
        if (eps_r != 0.0 || tan_delta != 0.0)
            throw DomainError("material '" + name +
                              "': metal must not set eps_r/tan_delta");
    }
}

namespace {

double parse_field(const std::string& token, const char* field, int line_no,
                   std::string_view origin) {
    try {
        size_t pos = 0;
        const double v = std::stod(token, &pos);
        if (pos != token.size())
            throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        std::ostringstream os;
        os << origin << ":" << line_no << ": bad numeric value '" << token
           << "' for field " << field;
        throw ParseError(os.str());
    }
}

} // namespace

MaterialLibrary MaterialLibrary::from_text(std::string_view text,
                                           std::string_view origin) {
    MaterialLibrary lib;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::string name, kind, eps, tan, mu, rs, source;
        if (!(fields >> name))
            continue; // blank or comment-only line
        if (!(fields >> kind >> eps >> tan >> mu >> rs)) {
            std::ostringstream os;
            os << origin << ":" << line_no
               << ": expected 'name kind eps_r tan_delta mu_r r_surface source'";
            throw ParseError(os.str());
        }
        std::getline(fields, source);
        if (const auto first = source.find_first_not_of(" \t");
            first != std::string::npos)
            source.erase(0, first);
        else
            source.clear();

        Material m;
        m.name = name;
        m.source = source;
        if (kind == "dielectric") {
            m.kind = MaterialKind::dielectric;
            m.eps_r = parse_field(eps, "eps_r", line_no, origin);
            m.tan_delta = parse_field(tan, "tan_delta", line_no, origin);
            m.mu_r = (mu == "-") ? 1.0 : parse_field(mu, "mu_r", line_no, origin);
            if (rs != "-")
                throw ParseError(std::string(origin) + ":" +
                                 std::to_string(line_no) +
                                 ": dielectric must leave r_surface as '-'");
        } else if (kind == "metal") {
            m.kind = MaterialKind::metal;
            m.eps_r = 0.0;
            if (eps != "-" || tan != "-")
                throw ParseError(std::string(origin) + ":" +
                                 std::to_string(line_no) +
                                 ": metal must leave eps_r/tan_delta as '-'");
            m.mu_r = (mu == "-") ? 1.0 : parse_field(mu, "mu_r", line_no, origin);
            m.r_surface = parse_field(rs, "r_surface", line_no, origin);
        } else {
            std::ostringstream os;
            os << origin << ":" << line_no << ": unknown material kind '" << kind
               << "' (expected dielectric|metal)";
            throw ParseError(os.str());
        }
        try {
            m.validate();
        } catch (const DomainError& e) {
            std::ostringstream os;
            os << origin << ":" << line_no << ": " << e.what();
            throw ParseError(os.str());
        }
        if (lib.contains(m.name)) {
            std::ostringstream os;
            os << origin << ":" << line_no << ": duplicate material '" << m.name
               << "'";
            throw ParseError(os.str());
        }
        lib.materials_.push_back(std::move(m));
    }
    return lib;
}

MaterialLibrary MaterialLibrary::load(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open material file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_text(buf.str(), path);
}

std::string default_data_dir() {
    if (const char* env = std::getenv("SPINCAVITY_DATA_DIR"); env && *env)
        return env;
#ifdef SPINCAVITY_DEFAULT_DATA_DIR
    return SPINCAVITY_DEFAULT_DATA_DIR;
#else
    return "data";
#endif
}

const MaterialLibrary& MaterialLibrary::builtin() {
    static const MaterialLibrary lib =
        MaterialLibrary::load(default_data_dir() + "/materials.dat");
    return lib;
}

const Material& MaterialLibrary::get(std::string_view name) const {
    for (const auto& m : materials_)
        if (m.name == name)
            return m;
    std::ostringstream os;
    os << "unknown material '" << name << "'; known:";
    for (const auto& m : materials_)
        os << " " << m.name;
    throw LookupError(os.str());
}

bool MaterialLibrary::contains(std::string_view name) const {
    for (const auto& m : materials_)
        if (m.name == name)
            return true;
    return false;
}

std::vector<std::string> MaterialLibrary::names() const {
    std::vector<std::string> out;
    out.reserve(materials_.size());
    for (const auto& m : materials_)
        out.push_back(m.name);
    return out;
}

const Material& builtin_material(std::string_view name) {
    return MaterialLibrary::builtin().get(name);
}

} // namespace spincavity
