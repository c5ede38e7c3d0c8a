#include "spincavity/specfile.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "spincavity/constants.hpp"
#include "spincavity/errors.hpp"

namespace spincavity {

namespace {

struct RawKey {
    std::string key, value;
    int line = 0;
};

struct RawSection {
    std::string name;
    int line = 0;
    std::vector<RawKey> keys;
};

std::string trim(std::string s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(std::string_view origin, int line,
                       const std::string& message) {
    std::ostringstream os;
    os << origin << ":" << line << ": " << message;
    throw ParseError(os.str());
}

std::vector<RawSection> tokenize(std::string_view text,
                                 std::string_view origin) {
    std::vector<RawSection> sections;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        if (line.front() == '[') {
            if (line.back() != ']' || line.size() < 3)
                fail(origin, line_no, "malformed section header '" + line + "'");
            sections.push_back({line.substr(1, line.size() - 2), line_no, {}});
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            fail(origin, line_no, "expected 'key = value', got '" + line + "'");
        if (sections.empty())
            fail(origin, line_no, "key outside any [section]");
        RawKey kv{trim(line.substr(0, eq)), trim(line.substr(eq + 1)), line_no};
        if (kv.key.empty() || kv.value.empty())
            fail(origin, line_no, "expected 'key = value', got '" + line + "'");
        sections.back().keys.push_back(std::move(kv));
    }
    return sections;
}

// Typed view over one section's keys with mandatory full consumption, so
// unknown keys are always rejected with their location.
class SectionReader {
public:
    SectionReader(const RawSection& raw, std::string_view origin)
        : raw_(raw), origin_(origin), used_(raw.keys.size(), false) {}

    std::string qualified(const std::string& key) const {
        return "[" + raw_.name + "]." + key;
    }

    const RawKey* find(const std::string& key) {
        const RawKey* hit = nullptr;
        for (std::size_t i = 0; i < raw_.keys.size(); ++i) {
            if (raw_.keys[i].key != key)
                continue;
            if (hit)
                fail(origin_, raw_.keys[i].line,
                     qualified(key) + ": duplicate key");
            hit = &raw_.keys[i];
            used_[i] = true;
        }
        return hit;
    }

    std::string require_string(const std::string& key) {
        const RawKey* kv = find(key);
        if (!kv)
            fail(origin_, raw_.line, qualified(key) + ": missing required key");
        return kv->value;
    }

    double require_double(const std::string& key) {
        const RawKey* kv = find(key);
        if (!kv)
            fail(origin_, raw_.line, qualified(key) + ": missing required key");
        return to_double(*kv);
    }

    std::optional<double> optional_double(const std::string& key) {
        const RawKey* kv = find(key);
        if (!kv)
            return std::nullopt;
        return to_double(*kv);
    }

    std::optional<std::string> optional_string(const std::string& key) {
        const RawKey* kv = find(key);
        if (!kv)
            return std::nullopt;
        return kv->value;
    }

    int require_int(const std::string& key) {
        const RawKey* kv = find(key);
        if (!kv)
            fail(origin_, raw_.line, qualified(key) + ": missing required key");
        int value = 0;
        const auto [ptr, ec] = std::from_chars(
            kv->value.data(), kv->value.data() + kv->value.size(), value);
        if (ec != std::errc{} || ptr != kv->value.data() + kv->value.size())
            fail(origin_, kv->line,
                 qualified(key) + ": bad integer '" + kv->value + "'");
        return value;
    }

    // Re-raise a cross-key validation failure at this section.
    [[noreturn]] void reject(const std::string& message) const {
        fail(origin_, raw_.line, "[" + raw_.name + "]: " + message);
    }

    [[noreturn]] void reject_key(const std::string& key,
                                 const std::string& message) {
        const RawKey* kv = find(key);
        fail(origin_, kv ? kv->line : raw_.line,
             qualified(key) + ": " + message);
    }

    void finish() {
        for (std::size_t i = 0; i < raw_.keys.size(); ++i)
            if (!used_[i])
                fail(origin_, raw_.keys[i].line,
                     qualified(raw_.keys[i].key) + ": unknown key");
    }

private:
    double to_double(const RawKey& kv) {
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(
            kv.value.data(), kv.value.data() + kv.value.size(), value);
        if (ec != std::errc{} || ptr != kv.value.data() + kv.value.size())
            fail(origin_, kv.line,
                 qualified(kv.key) + ": bad number '" + kv.value + "'");
        return value;
    }

    const RawSection& raw_;
    std::string_view origin_;
    std::vector<bool> used_;
};

double positive(SectionReader& sec, const std::string& key) {
    const double v = sec.require_double(key);
    if (!(v > 0.0))
        sec.reject_key(key, "must be positive");
    return v;
}

const Material& resolve_material(SectionReader& sec, const std::string& key,
                                 const std::string& name,
                                 const MaterialLibrary& materials) {
    if (!materials.contains(name))
        sec.reject_key(key, "unknown material '" + name + "'");
    return materials.get(name);
}

CavityGeometry read_geometry(SectionReader& sec,
                             const MaterialLibrary& materials) {
    CavityGeometry geometry;
    const std::string variant = sec.require_string("variant");
    const std::string wall = sec.require_string("wall");
    geometry.wall = resolve_material(sec, "wall", wall, materials);
    if (geometry.wall.kind != MaterialKind::metal)
        sec.reject_key("wall", "material '" + wall + "' is not a metal");

    if (variant == "rectangular") {
        RectangularGeometry g;
        g.a = positive(sec, "a");
        g.b = positive(sec, "b");
        g.d = positive(sec, "d");
        geometry.shape = g;
    } else if (variant == "cylindrical") {
        CylindricalGeometry g;
        g.radius = positive(sec, "radius");
        g.height = positive(sec, "height");
        geometry.shape = g;
    } else if (variant == "axisymmetric") {
        AxisymmetricGeometry g;
        g.outer_radius = positive(sec, "radius");
        g.height = positive(sec, "height");
        geometry.shape = g;
    } else if (variant == "reentrant") {
        ReentrantGeometry g;
        g.cavity_radius = positive(sec, "cavity_radius");
        g.cavity_height = positive(sec, "cavity_height");
        g.post_radius = positive(sec, "post_radius");
        g.gap = positive(sec, "gap");
        geometry.shape = g;
    } else {
        sec.reject_key("variant",
                       "unknown variant '" + variant +
                           "' (rectangular|cylindrical|axisymmetric|reentrant)");
    }
    sec.finish();
    return geometry;
}

Region read_region(SectionReader& sec, const MaterialLibrary& materials) {
    Region region;
    region.label = sec.require_string("label");
    const std::string material = sec.require_string("material");
    region.material = resolve_material(sec, "material", material, materials);
    if (region.material.kind != MaterialKind::dielectric)
        sec.reject_key("material",
                       "region material '" + material + "' must be dielectric");
    region.r_min = sec.require_double("r_min");
    region.r_max = sec.require_double("r_max");
    region.z_min = sec.require_double("z_min");
    region.z_max = sec.require_double("z_max");
    if (region.r_min < 0.0)
        sec.reject_key("r_min", "must be >= 0");
    if (!(region.r_max > region.r_min))
        sec.reject_key("r_max", "must exceed r_min");
    if (!(region.z_max > region.z_min))
        sec.reject_key("z_max", "must exceed z_min");
    sec.finish();
    return region;
}

} // namespace

double CavitySpec::sample_region_volume() const {
    if (!ensemble)
        throw DomainError("spec has no [ensemble] section");
    const auto* axi = std::get_if<AxisymmetricGeometry>(&geometry.shape);
    if (!axi)
        throw DomainError("sample regions require the axisymmetric variant");
    double volume = 0.0;
    for (const auto& region : axi->regions)
        if (region.label == ensemble->sample_label)
            volume += constants::pi *
                      (region.r_max * region.r_max -
                       region.r_min * region.r_min) *
                      (region.z_max - region.z_min);
    if (volume == 0.0)
        throw DomainError("no region labeled '" + ensemble->sample_label + "'");
    return volume;
}

CavitySpec parse_spec_text(std::string_view text, std::string_view origin,
                           const MaterialLibrary& materials) {
    const std::vector<RawSection> sections = tokenize(text, origin);

    const RawSection* geometry_raw = nullptr;
    const RawSection* mesh_raw = nullptr;
    const RawSection* solver_raw = nullptr;
    const RawSection* ensemble_raw = nullptr;
    const RawSection* coupling_raw = nullptr;
    std::vector<const RawSection*> region_raws;

    auto take_unique = [&](const RawSection& s, const RawSection*& slot) {
        if (slot)
            fail(origin, s.line, "duplicate [" + s.name + "] section");
        slot = &s;
    };
    for (const auto& s : sections) {
        if (s.name == "geometry")
            take_unique(s, geometry_raw);
        else if (s.name == "region" || s.name == "regions")
            region_raws.push_back(&s);
        else if (s.name == "mesh")
            take_unique(s, mesh_raw);
        else if (s.name == "solver")
            take_unique(s, solver_raw);
        else if (s.name == "ensemble")
            take_unique(s, ensemble_raw);
        else if (s.name == "coupling")
            take_unique(s, coupling_raw);
        else
            fail(origin, s.line, "unknown section [" + s.name + "]");
    }
    if (!geometry_raw)
        fail(origin, 1, "missing [geometry] section");

    CavitySpec spec;
    {
        SectionReader sec(*geometry_raw, origin);
        spec.geometry = read_geometry(sec, materials);
    }

    auto* axi = std::get_if<AxisymmetricGeometry>(&spec.geometry.shape);
    for (const auto* raw : region_raws) {
        SectionReader sec(*raw, origin);
        if (!axi)
            sec.reject("regions require the axisymmetric variant");
        axi->regions.push_back(read_region(sec, materials));
    }
    try {
        spec.geometry.validate();
    } catch (const Error& e) {
        fail(origin, geometry_raw->line,
             std::string("[geometry]: ") + e.what());
    }

    const bool meshed = std::holds_alternative<CylindricalGeometry>(
                            spec.geometry.shape) ||
                        std::holds_alternative<AxisymmetricGeometry>(
                            spec.geometry.shape);
    if (mesh_raw) {
        SectionReader sec(*mesh_raw, origin);
        if (!meshed)
            sec.reject("[mesh] applies only to cylindrical/axisymmetric "
                       "variants");
        spec.target_cell = positive(sec, "target_cell");
        sec.finish();
    } else if (meshed) {
        fail(origin, geometry_raw->line,
             "missing [mesh] section (required for variant '" +
                 std::string(variant_name(spec.geometry)) + "')");
    }

    const bool needs_solver =
        meshed ||
        std::holds_alternative<RectangularGeometry>(spec.geometry.shape);
    if (solver_raw) {
        SectionReader sec(*solver_raw, origin);
        SolverSection solver;
        solver.window_low_hz = positive(sec, "window_low");
        solver.window_high_hz = positive(sec, "window_high");
        if (!(solver.window_high_hz > solver.window_low_hz))
            sec.reject_key("window_high", "must exceed window_low");
        solver.n_modes = sec.require_int("n_modes");
        if (solver.n_modes < 1)
            sec.reject_key("n_modes", "must be >= 1");
        sec.finish();
        spec.solver = solver;
    } else if (needs_solver) {
        fail(origin, geometry_raw->line,
             "missing [solver] section (required for variant '" +
                 std::string(variant_name(spec.geometry)) + "')");
    }

    if (ensemble_raw) {
        SectionReader sec(*ensemble_raw, origin);
        EnsembleSection ensemble;
        ensemble.rho = positive(sec, "rho");
        ensemble.gamma_s_over_2pi_hz = positive(sec, "gamma_s_over_2pi");
        if (const auto g = sec.optional_double("g_factor")) {
            if (!(*g > 0.0))
                sec.reject_key("g_factor", "must be positive");
            ensemble.g_factor = *g;
        }
        if (const auto d = sec.optional_double("d_over_h")) {
            if (!(*d > 0.0))
                sec.reject_key("d_over_h", "must be positive");
            ensemble.d_over_h_hz = *d;
        }
        ensemble.sample_label = sec.require_string("sample");
        const bool found =
            axi && std::any_of(axi->regions.begin(), axi->regions.end(),
                               [&](const Region& r) {
                                   return r.label == ensemble.sample_label;
                               });
        if (!found)
            sec.reject_key("sample", "no region labeled '" +
                                         ensemble.sample_label + "'");
        sec.finish();
        spec.ensemble = ensemble;
    }

    if (coupling_raw) {
        SectionReader sec(*coupling_raw, origin);
        CouplingSection coupling;
        if (const auto p = sec.optional_string("pathway")) {
            if (*p != "exact-si" && *p != "calibrated")
                sec.reject_key("pathway", "expected exact-si or calibrated");
            coupling.pathway = *p;
        }
        if (const auto a = sec.optional_double("alpha")) {
            if (*a < 0.0)
                sec.reject_key("alpha", "must be >= 0");
            coupling.alpha = *a;
        }
        sec.finish();
        spec.coupling = coupling;
    }

    return spec;
}

CavitySpec parse_spec(const std::string& path,
                      const MaterialLibrary& materials) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open spec file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec_text(buf.str(), path, materials);
}

namespace {

std::string fmt(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

} // namespace

std::string serialize_spec(const CavitySpec& spec) {
    std::ostringstream os;
    os << "[geometry]\n";
    os << "variant = " << variant_name(spec.geometry) << "\n";
    os << "wall = " << spec.geometry.wall.name << "\n";
    const AxisymmetricGeometry* axi = nullptr;
    if (const auto* g = std::get_if<RectangularGeometry>(&spec.geometry.shape)) {
        os << "a = " << fmt(g->a) << "\n";
        os << "b = " << fmt(g->b) << "\n";
        os << "d = " << fmt(g->d) << "\n";
    } else if (const auto* g =
                   std::get_if<CylindricalGeometry>(&spec.geometry.shape)) {
        os << "radius = " << fmt(g->radius) << "\n";
        os << "height = " << fmt(g->height) << "\n";
    } else if (const auto* g =
                   std::get_if<AxisymmetricGeometry>(&spec.geometry.shape)) {
        os << "radius = " << fmt(g->outer_radius) << "\n";
        os << "height = " << fmt(g->height) << "\n";
        axi = g;
    } else if (const auto* g =
                   std::get_if<ReentrantGeometry>(&spec.geometry.shape)) {
        os << "cavity_radius = " << fmt(g->cavity_radius) << "\n";
        os << "cavity_height = " << fmt(g->cavity_height) << "\n";
        os << "post_radius = " << fmt(g->post_radius) << "\n";
        os << "gap = " << fmt(g->gap) << "\n";
    }
    if (axi) {
        for (const auto& region : axi->regions) {
            os << "\n[region]\n";
            os << "label = " << region.label << "\n";
            os << "material = " << region.material.name << "\n";
            os << "r_min = " << fmt(region.r_min) << "\n";
            os << "r_max = " << fmt(region.r_max) << "\n";
            os << "z_min = " << fmt(region.z_min) << "\n";
            os << "z_max = " << fmt(region.z_max) << "\n";
        }
    }
    if (spec.target_cell) {
        os << "\n[mesh]\n";
        os << "target_cell = " << fmt(*spec.target_cell) << "\n";
    }
    if (spec.solver) {
        os << "\n[solver]\n";
        os << "window_low = " << fmt(spec.solver->window_low_hz) << "\n";
        os << "window_high = " << fmt(spec.solver->window_high_hz) << "\n";
        os << "n_modes = " << spec.solver->n_modes << "\n";
    }
    if (spec.ensemble) {
        os << "\n[ensemble]\n";
        os << "rho = " << fmt(spec.ensemble->rho) << "\n";
        os << "gamma_s_over_2pi = " << fmt(spec.ensemble->gamma_s_over_2pi_hz)
           << "\n";
        os << "g_factor = " << fmt(spec.ensemble->g_factor) << "\n";
        os << "d_over_h = " << fmt(spec.ensemble->d_over_h_hz) << "\n";
        os << "sample = " << spec.ensemble->sample_label << "\n";
    }
    os << "\n[coupling]\n";
    os << "pathway = " << spec.coupling.pathway << "\n";
    os << "alpha = " << fmt(spec.coupling.alpha) << "\n";
    return os.str();
}

} // namespace spincavity
