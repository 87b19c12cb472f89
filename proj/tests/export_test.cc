// Copyright 2026 The pathsum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <sstream>

#include <gtest/gtest.h>

#include "pathsum/export.h"
#include "pathsum/rng.h"
#include "pathsum/suite.h"

namespace pathsum {
namespace {

TEST(Export, format_double_round_trips) {
    CounterRng rng(23, 0);
    for (int i = 0; i < 1000; i++) {
        double v = (rng.uniform() - 0.5) * std::pow(10.0, static_cast<double>(rng() % 40) - 20.0);
        EXPECT_EQ(std::stod(format_double(v)), v);
    }
    EXPECT_EQ(format_double(0.5), "0.5");
    EXPECT_EQ(format_double(-2.0), "-2");
}

TEST(Export, spiral_csv) {
    SpiralTrace t{{Amplitude(1.0, 0.0), Amplitude(1.5, -0.25)}, {0.0, 1.0}, {0.0, 0.1}};
    std::ostringstream out;
    write_spiral_csv(out, t);
    EXPECT_EQ(out.str(), "index,re,im\n0,1,0\n1,1.5,-0.25\n");
}

TEST(Export, interferometer_and_spin_csv) {
    std::vector<InterferometerRow> rows{{0.0, 0.0, interferometer_joint(InterferometerSetting::congruent(0.0, 0.0))}};
    std::ostringstream out;
    write_interferometer_csv(out, rows);
    EXPECT_EQ(out.str().substr(0, out.str().find('\n')), "alpha,beta,p_uu,p_ud,p_du,p_dd");
    std::vector<SpinRow> spin{{0.0, 0.0, -1.0}};
    std::ostringstream s;
    write_spin_csv(s, spin);
    EXPECT_EQ(s.str(), "alpha,beta,E\n0,0,-1\n");
}

TEST(Export, event_log_csv) {
    OutcomeModel model{{"d0", "d1"}, {0.5, 0.5}};
    std::vector<EventRecord> records{{0, 3, HomotopyClass::winding(-1), 1}};
    std::ostringstream out;
    write_event_log_csv(out, records, model);
    EXPECT_EQ(out.str(), "trial,path_id,class,outcome\n0,3,-1,d1\n");
}

TEST(Export, json_documents) {
    RingPairAmplitude amp{Amplitude(2.0, 0.0), Amplitude(0.0, 1.0), 0.25};
    auto f = factorization_json(amp);
    EXPECT_EQ(f.at("f_re"), 0.0);
    EXPECT_EQ(f.at("f_im"), 1.0);
    EXPECT_EQ(f.at("residual"), 0.25);
    auto b = bell_report_json(bell_report());
    for (const char *key : {"chsh_quantum", "chsh_lhv_max", "ghz_products", "mermin_match_count",
                            "no_signaling_max_deviation"}) {
        EXPECT_TRUE(b.contains(key)) << key;
    }
}

TEST(Suite, single_criterion_is_deterministic_and_tamperable) {
    auto a = run_criterion(6);
    auto b = run_criterion(6);
    EXPECT_TRUE(a.passed());
    EXPECT_EQ(suite_summary({a}).dump(), suite_summary({b}).dump());
    EXPECT_EQ(format_criterion_line(a).rfind("[PASS] 6 ", 0), 0u);
    SuiteOptions tamper;
    tamper.tamper_criterion = 6;
    auto t = run_criterion(6, tamper);
    EXPECT_FALSE(t.passed());
    EXPECT_EQ(format_criterion_line(t).rfind("[FAIL] 6 ", 0), 0u);
    EXPECT_FALSE(suite_summary({t}).at("all_passed").get<bool>());
}

TEST(Suite, check_kinds) {
    EXPECT_TRUE((Check{"x", 1.0, 2.0, CheckKind::Below}).passed());
    EXPECT_FALSE((Check{"x", 2.0, 2.0, CheckKind::Below}).passed());
    EXPECT_TRUE((Check{"x", 2.0, 2.0, CheckKind::AtMost}).passed());
    EXPECT_TRUE((Check{"x", 2.0, 2.0, CheckKind::AtLeast}).passed());
    EXPECT_FALSE((Check{"x", 2.0, 2.0, CheckKind::Above}).passed());
    EXPECT_TRUE((Check{"x", 3.0, 3.0, CheckKind::Equal}).passed());
    EXPECT_FALSE((Check{"x", NAN, 3.0, CheckKind::Below}).passed());
}

}  // namespace
}  // namespace pathsum
