#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace spincavity {

enum class MaterialKind { dielectric, metal };

// Linear, isotropic material at the operating temperature (4 K data for the
// bundled library).  A dielectric carries eps_r/tan_delta, a metal carries a
// surface resistance; exactly one of the two groups is populated.
struct Material {
    std::string name;
    MaterialKind kind = MaterialKind::dielectric;
    double eps_r = 1.0;       // relative permittivity (dielectric only)
    double tan_delta = 0.0;   // loss tangent (dielectric only)
    double mu_r = 1.0;        // kept for file compatibility, must be 1
    double r_surface = 0.0;   // surface resistance, ohm (metal only)
    std::string source;       // literature reference for the numbers

    static Material make_dielectric(std::string name, double eps_r,
                                    double tan_delta, std::string source = "");
    static Material make_metal(std::string name, double r_surface,
                               std::string source = "");

    void validate() const; // throws DomainError on violated invariants

    bool operator==(const Material&) const = default;
};

// Registry of materials loaded from a whitespace-separated table:
//   name kind eps_r tan_delta mu_r r_surface source
// '-' marks an unset field, '#' starts a comment.
class MaterialLibrary {
public:
    static MaterialLibrary load(const std::string& path);
    static MaterialLibrary from_text(std::string_view text,
                                     std::string_view origin = "<string>");

    // Library shipped in the repository's data directory.  Resolution order:
    // SPINCAVITY_DATA_DIR environment variable, then the compiled-in default.
    static const MaterialLibrary& builtin();

    const Material& get(std::string_view name) const; // LookupError if absent
    bool contains(std::string_view name) const;
    std::vector<std::string> names() const;
    const std::vector<Material>& all() const { return materials_; }

private:
    std::vector<Material> materials_;
};

// Convenience accessor into MaterialLibrary::builtin().
const Material& builtin_material(std::string_view name);

// Directory holding materials.dat / table1.csv after the override rules.
std::string default_data_dir();

} // namespace spincavity
