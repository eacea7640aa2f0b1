#include <gtest/gtest.h>

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <string>

#include "flagcode/flagcode.h"

namespace {

struct CodeHandle {
    flc_code* p = nullptr;
    ~CodeHandle() { flc_free(p); }
};

std::string take(char* s) {
    std::string out = s ? s : "";
    flc_string_free(s);
    return out;
}

}  // namespace

TEST(CApi, ConstructAndInspect) {
    CodeHandle c;
    ASSERT_EQ(flc_construct_full(2, 1, 2, &c.p), FLC_OK);
    EXPECT_EQ(flc_size(c.p), 5u);
    EXPECT_EQ(flc_ambient(c.p), 4u);
    std::uint32_t p = 0, m = 0;
    ASSERT_EQ(flc_field(c.p, &p, &m), FLC_OK);
    EXPECT_EQ(p, 2u);
    EXPECT_EQ(m, 1u);
    char* type = nullptr;
    ASSERT_EQ(flc_type_string(c.p, &type), FLC_OK);
    EXPECT_EQ(take(type), "1,2,3");
    EXPECT_STREQ(flc_provenance(c.p), "full-from-spread");
}

TEST(CApi, VerifyReports) {
    CodeHandle c;
    ASSERT_EQ(flc_construct_full(3, 1, 2, &c.p), FLC_OK);
    flc_verify_report r;
    ASSERT_EQ(flc_verify(c.p, &r), FLC_OK);
    EXPECT_EQ(r.size, 10u);
    EXPECT_EQ(r.min_distance, 8u);
    EXPECT_EQ(r.bound, 8u);
    EXPECT_TRUE(r.optimum);
    EXPECT_TRUE(r.disjoint);
    EXPECT_TRUE(r.characterization);
    EXPECT_TRUE(r.construction_checked);
    EXPECT_TRUE(r.construction_ok);
}

TEST(CApi, PunctureAndDivisor) {
    CodeHandle full, punct, div;
    ASSERT_EQ(flc_construct_full(2, 1, 3, &full.p), FLC_OK);
    ASSERT_EQ(flc_puncture(full.p, "1,3", &punct.p), FLC_OK);
    flc_verify_report r;
    ASSERT_EQ(flc_verify(punct.p, &r), FLC_OK);
    EXPECT_EQ(r.size, 9u);
    EXPECT_TRUE(r.optimum);
    ASSERT_EQ(flc_construct_divisor(2, 1, 6, "1,2,3", &div.p), FLC_OK);
    ASSERT_EQ(flc_verify(div.p, &r), FLC_OK);
    EXPECT_EQ(r.size, 9u);
    EXPECT_EQ(r.min_distance, 12u);
    EXPECT_TRUE(r.optimum);
    EXPECT_EQ(flc_puncture(full.p, "1,7", &punct.p), FLC_E_INVALID_ARGUMENT);
}

TEST(CApi, SerializeParseAndFiles) {
    CodeHandle c, back, loaded;
    ASSERT_EQ(flc_construct_full(2, 2, 2, &c.p), FLC_OK);
    char* text = nullptr;
    ASSERT_EQ(flc_serialize(c.p, &text), FLC_OK);
    const std::string s = take(text);
    ASSERT_EQ(flc_parse(s.c_str(), &back.p), FLC_OK);
    EXPECT_EQ(flc_size(back.p), 17u);

    const auto path = (std::filesystem::temp_directory_path() / "flagcode_test_capi.flc").string();
    ASSERT_EQ(flc_save(c.p, path.c_str()), FLC_OK);
    ASSERT_EQ(flc_load(path.c_str(), &loaded.p), FLC_OK);
    char* again = nullptr;
    ASSERT_EQ(flc_serialize(loaded.p, &again), FLC_OK);
    EXPECT_EQ(take(again), s);
    std::filesystem::remove(path);
    flc_code* missing = nullptr;
    EXPECT_EQ(flc_load(path.c_str(), &missing), FLC_E_IO);
    EXPECT_EQ(missing, nullptr);
}

TEST(CApi, ErrorsAndLastMessage) {
    flc_code* c = nullptr;
    EXPECT_EQ(flc_construct_full(4, 1, 2, &c), FLC_E_NON_PRIME_P);
    EXPECT_EQ(c, nullptr);
    EXPECT_NE(std::strlen(flc_last_error()), 0u);
    EXPECT_EQ(flc_construct_full(2, 1, 2, nullptr), FLC_E_NULL_ARGUMENT);
    EXPECT_EQ(flc_parse("FLC 1\nq 2 1 1 1\n", &c), FLC_E_PARSE);
    EXPECT_NE(std::string(flc_last_error()).find("line 3"), std::string::npos);
    EXPECT_EQ(flc_construct_divisor(2, 1, 5, "2", &c), FLC_E_NOT_DIVISOR);
    EXPECT_STREQ(flc_status_name(FLC_OK), "ok");
    EXPECT_STRNE(flc_status_name(FLC_E_PARSE), flc_status_name(FLC_E_IO));
    flc_verify_report r;
    EXPECT_EQ(flc_verify(nullptr, &r), FLC_E_NULL_ARGUMENT);
}

TEST(CApi, SimulateIsDeterministic) {
    CodeHandle c;
    ASSERT_EQ(flc_construct_full(2, 1, 2, &c.p), FLC_OK);
    flc_sim_params params;
    flc_sim_params_init(&params);
    params.trials = 200;
    params.seed = 9;
    params.erasure_prob = 0.3;
    params.blackout_prob = 0.1;
    params.machine = 1;
    char *a = nullptr, *b = nullptr;
    ASSERT_EQ(flc_simulate(c.p, &params, &a), FLC_OK);
    params.threads = 4;
    ASSERT_EQ(flc_simulate(c.p, &params, &b), FLC_OK);
    EXPECT_EQ(take(a), take(b));
    params.erasure_prob = -1;
    EXPECT_EQ(flc_simulate(c.p, &params, &a), FLC_E_INVALID_ARGUMENT);
}

TEST(CApi, OraclesAndSpreads) {
    flc_spread_report s;
    char* details = nullptr;
    ASSERT_EQ(flc_spread_verify_built(2, 1, 3, 6, &s, &details), FLC_OK);
    flc_string_free(details);
    EXPECT_TRUE(s.ok);
    EXPECT_EQ(s.actual_size, 9u);
    EXPECT_EQ(s.expected_size, 9u);

    CodeHandle c;
    ASSERT_EQ(flc_construct_full(2, 1, 2, &c.p), FLC_OK);
    ASSERT_EQ(flc_spread_verify_code(c.p, &s, &details), FLC_OK);
    flc_string_free(details);
    EXPECT_TRUE(s.ok);
    EXPECT_EQ(s.actual_size, 5u);

    flc_admissibility a;
    char* reason = nullptr;
    ASSERT_EQ(flc_check_admissibility(2, 6, 3, &a, &reason), FLC_OK);
    flc_string_free(reason);
    EXPECT_TRUE(a.admissible);
    EXPECT_EQ(a.spread_size, 9u);

    flc_maxclique_report mc;
    ASSERT_EQ(flc_maxclique(2, 1, 4, 8, &mc), FLC_OK);
    EXPECT_EQ(mc.vertices, 315u);
    EXPECT_EQ(mc.clique_number, 5u);
    EXPECT_EQ(mc.witnesses, mc.witnesses_spread_ok);
    EXPECT_TRUE(mc.symmetric);
    EXPECT_TRUE(mc.loop_free);
}
