// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "sirf/errors.hpp"
#include "sirf/trng/config.hpp"

namespace {

using namespace sirf;
using namespace sirf::trng;

TEST(Config, DefaultsAreValid) {
  RunConfig c;
  EXPECT_NO_THROW(c.validate());
  const SpongeOptions o = c.sponge_options();
  EXPECT_TRUE(o.chaining);
  EXPECT_TRUE(o.randomize_rc);
  EXPECT_TRUE(o.randomize_tcc);
}

TEST(Config, ApplySettings) {
  RunConfig c;
  apply_setting(c, "device_seed", "42");
  apply_setting(c, "sigma", "2.5");
  apply_setting(c, "temp_offset", "-20");
  apply_setting(c, "supply_scale", "1.05");
  apply_setting(c, "chaining", "off");
  apply_setting(c, "rc", "150");
  apply_setting(c, "tcc", "rand");
  apply_setting(c, "bits", "1000");
  EXPECT_EQ(c.device_seed, 42u);
  EXPECT_EQ(c.sigma, 2.5);
  EXPECT_EQ(c.env.temp_offset, -20.0);
  EXPECT_EQ(c.env.supply_scale, 1.05);
  EXPECT_FALSE(c.chaining);
  EXPECT_FALSE(c.rc_randomized);
  EXPECT_EQ(c.fixed_rc, 150u);
  EXPECT_TRUE(c.tcc_randomized);
  EXPECT_EQ(c.bits, 1000u);
  EXPECT_NO_THROW(c.validate());
}

TEST(Config, RejectsBadValues) {
  RunConfig c;
  EXPECT_THROW(apply_setting(c, "nonsense", "1"), ConfigError);
  EXPECT_THROW(apply_setting(c, "device_seed", "-1"), ConfigError);
  EXPECT_THROW(apply_setting(c, "sigma", "abc"), ConfigError);
  EXPECT_THROW(apply_setting(c, "chaining", "maybe"), ConfigError);

  RunConfig rc;
  apply_setting(rc, "rc", "127");
  EXPECT_THROW(rc.validate(), ConfigError);
  RunConfig tcc;
  apply_setting(tcc, "tcc", "17");
  EXPECT_THROW(tcc.validate(), ConfigError);
  apply_setting(tcc, "tcc", "24");
  EXPECT_THROW(tcc.validate(), ConfigError);
  RunConfig s;
  s.sigma = -1;
  EXPECT_THROW(s.validate(), ConfigError);
  RunConfig v;
  v.env.supply_scale = 0;
  EXPECT_THROW(v.validate(), ConfigError);
}

class ConfigFile : public ::testing::Test {
 protected:
  std::filesystem::path path = std::filesystem::temp_directory_path() / "sirf_config_test.conf";
  void TearDown() override { std::filesystem::remove(path); }
  void write(const std::string& text) { std::ofstream(path) << text; }
};

TEST_F(ConfigFile, LoadsWithComments) {
  write("# comment\n  device_seed = 7  \n\nnoise_seed=9 # trailing\ntcc = 12\n");
  RunConfig c;
  load_config_file(c, path.string());
  EXPECT_EQ(c.device_seed, 7u);
  EXPECT_EQ(c.noise_seed, 9u);
  EXPECT_FALSE(c.tcc_randomized);
  EXPECT_EQ(c.fixed_tcc, 12u);
}

TEST_F(ConfigFile, ReportsLineOfMalformedEntry) {
  write("device_seed = 1\njust words\n");
  RunConfig c;
  try {
    load_config_file(c, path.string());
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find(":2:"), std::string::npos);
  }
}

TEST_F(ConfigFile, MissingFile) {
  RunConfig c;
  EXPECT_THROW(load_config_file(c, (path.string() + ".absent")), ConfigError);
}

TEST_F(ConfigFile, TextRoundTrip) {
  RunConfig a;
  a.device_seed = 123;
  a.noise_seed = 456;
  a.sigma = 0.1;
  a.env.temp_offset = -12.5;
  a.env.supply_scale = 0.95;
  a.chaining = false;
  a.rc_randomized = false;
  a.fixed_rc = 170;
  a.geometry.segments_per_stage = 64;
  a.bits = 99;
  write(to_config_text(a));
  RunConfig b;
  load_config_file(b, path.string());
  EXPECT_EQ(to_config_text(a), to_config_text(b));
  EXPECT_EQ(b.sigma, 0.1);
  EXPECT_EQ(b.env.supply_scale, 0.95);
  EXPECT_EQ(b.geometry.segments_per_stage, 64u);
}

}  // namespace
