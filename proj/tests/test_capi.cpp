#include <doctest.h>
#include <mfg.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

const char* kDegenerate = "[problem]\n"
                          "K = 4\n"
                          "N_t = 16\n"
                          "m0_kind = dirac\n"
                          "m0_locations = 0 0 0\n"
                          "m0_weights = 1\n"
                          "[payoff]\n"
                          "kind = smoothing\n"
                          "gamma = 1\n"
                          "delta_g = 0\n";

} // namespace

TEST_CASE("c api lifecycle and run")
{
    char err[256] = {0};
    mfg_config* cfg = nullptr;
    REQUIRE(mfg_config_parse(kDegenerate, &cfg, err, sizeof err) == 0);
    REQUIRE(cfg != nullptr);

    const std::filesystem::path out
        = std::filesystem::temp_directory_path() / "mfg_capi_test";
    std::filesystem::create_directories(out);

    char msg[512] = {0};
    CHECK(mfg_run(cfg, "solve", out.string().c_str(), 0, 1, msg, sizeof msg) == 0);
    CHECK(std::filesystem::exists(out / "m.txt"));
    CHECK(std::filesystem::exists(out / "solve_summary.txt"));
    CHECK(std::strlen(msg) > 0);

    CHECK(mfg_run(cfg, "no-such-command", out.string().c_str(), 0, 1, msg, sizeof msg)
          == 1);

    const long need = mfg_config_serialize(cfg, nullptr, 0);
    REQUIRE(need > 0);
    std::string buf(static_cast<std::size_t>(need) + 1, '\0');
    CHECK(mfg_config_serialize(cfg, buf.data(), buf.size()) == need);
    CHECK(buf.find("[problem]") != std::string::npos);

    mfg_config_free(cfg);
    std::filesystem::remove_all(out);
}

TEST_CASE("c api rejects bad input")
{
    char err[256] = {0};
    mfg_config* cfg = nullptr;
    CHECK(mfg_config_parse("[problem]\nalpha = 2\n", &cfg, err, sizeof err) == 1);
    CHECK(cfg == nullptr);
    CHECK(std::strlen(err) > 0);

    CHECK(mfg_config_load("/no/such/file.cfg", &cfg, err, sizeof err) == 1);
    CHECK(cfg == nullptr);
}

TEST_CASE("version string")
{
    CHECK(std::strlen(mfg_version()) > 0);
}
