#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef _WIN32
#include <sys/wait.h>
#endif

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// runs the installed command-line tool with the given arguments, capturing
// exit status and both streams
RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path dir = fs::temp_directory_path() / "spincavity-cli-io";
    fs::create_directories(dir);
    const fs::path out = dir / ("out" + std::to_string(counter) + ".txt");
    const fs::path err = dir / ("err" + std::to_string(counter) + ".txt");
    ++counter;
    const std::string cmd = std::string("\"") + SPINCAVITY_CLI_PATH + "\" " +
                            args + " > \"" + out.string() + "\" 2> \"" +
                            err.string() + "\"";
    const int status = std::system(cmd.c_str());
    RunResult r;
#ifdef _WIN32
    r.code = status;
#else
    r.code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
#endif
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

std::string spec_arg(const char* name) {
    return std::string("--spec \"") + SPINCAVITY_SPEC_DIR + "/" + name + "\"";
}

} // namespace

TEST_CASE("solve reports modes and budgets for each shipped description") {
    const RunResult cyl = run_cli("solve " + spec_arg("empty_cylinder.spec"));
    CHECK(cyl.code == 0);
    CHECK(cyl.out.find("cylindrical cavity") != std::string::npos);
    CHECK(cyl.out.find("frequency") != std::string::npos);
    CHECK(cyl.out.find("3.01") != std::string::npos);
    CHECK(cyl.out.find("Q0") != std::string::npos);

    const RunResult ds = run_cli("solve " + spec_arg("double_split.spec"));
    CHECK(ds.code == 0);
    CHECK(ds.out.find("axisymmetric cavity") != std::string::npos);
    CHECK(ds.out.find("p_m[diamond") != std::string::npos);
    CHECK(ds.out.find("2.88") != std::string::npos);

    const RunResult re = run_cli("solve " + spec_arg("reentrant.spec"));
    CHECK(re.code == 0);
    CHECK(re.out.find("reentrant lumped model") != std::string::npos);
    CHECK(re.out.find("2.659") != std::string::npos);
}

TEST_CASE("solve exits nonzero when the window holds no mode") {
    const fs::path dir = fs::temp_directory_path() / "spincavity-cli-io";
    fs::create_directories(dir);
    const fs::path spec = dir / "gap_window.spec";
    std::ofstream(spec) << "[geometry]\n"
                           "variant = cylindrical\n"
                           "wall = copper\n"
                           "radius = 0.07\n"
                           "height = 0.10\n"
                           "[mesh]\n"
                           "target_cell = 2e-3\n"
                           "[solver]\n"
                           "window_low = 3.05e9\n"
                           "window_high = 3.3e9\n"
                           "n_modes = 1\n";
    const RunResult r = run_cli("solve --spec \"" + spec.string() + "\"");
    CHECK(r.code == 1);
    CHECK(r.err.find("no mode") != std::string::npos);
}

TEST_CASE("report computes figures of merit from explicit inputs") {
    const RunResult r = run_cli("report --p-m 0.084 --q0 127000");
    CHECK(r.code == 0);
    CHECK(r.out.find("calibrated") != std::string::npos);
    CHECK(r.out.find("strong") != std::string::npos);

    const RunResult csv =
        run_cli("--format csv report --p-m 0.084 --q0 127000");
    CHECK(csv.code == 0);
    CHECK(csv.out.find("pathway,") != std::string::npos);

    const RunResult missing = run_cli("report --p-m 0.084");
    CHECK(missing.code == 2);
}

TEST_CASE("the dataset comparison passes end to end") {
    const RunResult r = run_cli("table1");
    CHECK(r.code == 0);
    CHECK(r.out.find("pass") != std::string::npos);
    CHECK(r.out.find("TE*") != std::string::npos);

    const RunResult tight = run_cli("table1 --c-tol 1e-6");
    CHECK(tight.code == 1);
}

TEST_CASE("sweep writes the three output files with their schemas") {
    const fs::path dir =
        fs::temp_directory_path() / "spincavity-cli-sweep";
    fs::remove_all(dir);
    const RunResult r = run_cli(
        "--out \"" + dir.string() +
        "\" sweep --b-start 0.0975 --b-stop 0.1075 --b-steps 5 "
        "--b-r 0.1025 --g-c-mhz 102 --q0 1000");
    CHECK(r.code == 0);
    REQUIRE(fs::exists(dir / "dispersion.csv"));
    REQUIRE(fs::exists(dir / "spectra.csv"));
    REQUIRE(fs::exists(dir / "run_manifest.txt"));

    const std::string disp = slurp(dir / "dispersion.csv");
    CHECK(disp.rfind("b_tesla,delta_rad_s,omega_rad_s\n", 0) == 0);
    const std::string spec = slurp(dir / "spectra.csv");
    CHECK(spec.rfind("b_tesla,omega_rad_s,s11_sq\n", 0) == 0);
    const std::string manifest = slurp(dir / "run_manifest.txt");
    CHECK(manifest.rfind("tool = ", 0) == 0);
    CHECK(manifest.find("b_steps = 5") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("material dump and argument errors") {
    const RunResult mats = run_cli("materials");
    CHECK(mats.code == 0);
    CHECK(mats.out.find("rutile") != std::string::npos);
    CHECK(mats.out.find("copper") != std::string::npos);

    const RunResult bad = run_cli("solve --bogus-flag");
    CHECK(bad.code != 0);

    const RunResult none = run_cli("");
    CHECK(none.code != 0);
}
