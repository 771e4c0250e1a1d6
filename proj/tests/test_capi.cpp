#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "k3calc.h"

namespace {

std::string take(char* s) {
    REQUIRE(s != nullptr);
    std::string out(s);
    k3_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("status strings") {
    CHECK(std::string(k3_status_str(K3_OK)) == "ok");
    CHECK(std::string(k3_status_str(K3_ERROR_DOMAIN)) == "domain error");
    CHECK(std::string(k3_status_str(K3_ERROR_INVALID_ARGUMENT)) == "invalid argument");
}

TEST_CASE("eta product series handle") {
    k3_series* s = nullptr;
    REQUIRE(k3_series_eta_product(-24, 4, &s) == K3_OK);
    CHECK(k3_series_order(s) == 4);

    char* c = nullptr;
    REQUIRE(k3_series_coefficient(s, 2, &c) == K3_OK);
    CHECK(take(c) == "324");
    REQUIRE(k3_series_coefficient(s, 3, &c) == K3_OK);
    CHECK(take(c) == "3200");
    CHECK(k3_series_coefficient(s, 4, &c) == K3_ERROR_INVALID_ARGUMENT);
    k3_series_free(s);

    CHECK(k3_series_eta_product(-24, 0, &s) == K3_ERROR_INVALID_ARGUMENT);
    CHECK(std::strlen(k3_last_error()) > 0);
    CHECK(k3_series_eta_product(-24, 4, nullptr) == K3_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("series multiply and invert") {
    k3_series* finite = nullptr;
    REQUIRE(k3_series_eta_product(1, 16, &finite) == K3_OK);

    k3_series* inverse = nullptr;
    REQUIRE(k3_series_inverse(finite, &inverse) == K3_OK);

    k3_series* partitions = nullptr;
    REQUIRE(k3_series_partition_numbers(15, &partitions) == K3_OK);
    for (size_t n = 0; n < 16; ++n) {
        char* a = nullptr;
        char* b = nullptr;
        REQUIRE(k3_series_coefficient(inverse, n, &a) == K3_OK);
        REQUIRE(k3_series_coefficient(partitions, n, &b) == K3_OK);
        CHECK(take(a) == take(b));
    }

    k3_series* product = nullptr;
    REQUIRE(k3_series_mul(finite, inverse, &product) == K3_OK);
    char* c = nullptr;
    REQUIRE(k3_series_coefficient(product, 0, &c) == K3_OK);
    CHECK(take(c) == "1");
    for (size_t n = 1; n < 16; ++n) {
        REQUIRE(k3_series_coefficient(product, n, &c) == K3_OK);
        CHECK(take(c) == "0");
    }

    CHECK(k3_series_mul(finite, nullptr, &product) == K3_ERROR_INVALID_ARGUMENT);
    k3_series_free(product);
    k3_series_free(partitions);
    k3_series_free(inverse);
    k3_series_free(finite);
}

TEST_CASE("bl48 and fixed fiber counts") {
    char* s = nullptr;
    REQUIRE(k3_bl48_coefficient(2, &s) == K3_OK);
    CHECK(take(s) == "1224");
    REQUIRE(k3_fixed_fiber_count(3, &s) == K3_OK);
    CHECK(take(s) == "1224");
    CHECK(k3_fixed_fiber_count(0, &s) == K3_ERROR_DOMAIN);
}

TEST_CASE("admissible sequence list") {
    k3_seq_list* list = nullptr;
    REQUIRE(k3_enumerate_one_admissible(4, &list) == K3_OK);
    REQUIRE(k3_seq_list_size(list) == 5);

    // canonical order: offsets ascending; (1,2,1) at left=1 is present
    bool found = false;
    for (size_t i = 0; i < 5; ++i) {
        if (k3_seq_list_left(list, i) == 1 && k3_seq_list_length(list, i) == 3 &&
            k3_seq_list_value(list, i, 1) == 2)
            found = true;
    }
    CHECK(found);
    CHECK(k3_seq_list_left(list, 99) == -1);
    k3_seq_list_free(list);

    CHECK(k3_enumerate_one_admissible(0, &list) == K3_ERROR_DOMAIN);
}

TEST_CASE("severi bound report") {
    k3_bound_report* report = nullptr;
    REQUIRE(k3_severi_lower_bound(5, &report) == K3_OK);
    CHECK(k3_bound_report_g(report) == 5);
    CHECK(k3_bound_report_r(report) == 2);
    CHECK(k3_bound_report_omega_genus_lb(report) == 9);

    char* s = nullptr;
    REQUIRE(k3_bound_report_bl_count(report, &s) == K3_OK);
    CHECK(take(s) == "48");
    REQUIRE(k3_bound_report_severi_genus_lb(report, &s) == K3_OK);
    CHECK(take(s) == "384");
    REQUIRE(k3_bound_report_json(report, &s) == K3_OK);
    CHECK(take(s) ==
          "{\"g\":5,\"r\":2,\"bl_count\":\"48\",\"omega_genus_lb\":9,"
          "\"severi_genus_lb\":\"384\"}");
    k3_bound_report_free(report);

    CHECK(k3_severi_lower_bound(4, &report) == K3_ERROR_DOMAIN);
    CHECK(std::string(k3_last_error()).find("odd") != std::string::npos);
}

TEST_CASE("asymptotic fit") {
    double c = 0, resid = 0;
    REQUIRE(k3_asymptotic_fit(50, 400, &c, &resid) == K3_OK);
    CHECK(c > 0);
    CHECK(resid < 0.05);
    CHECK(k3_asymptotic_fit(5, 400, &c, &resid) == K3_ERROR_DOMAIN);
}

TEST_CASE("appendix genus surface") {
    char* s = nullptr;
    REQUIRE(k3_appendix_genus_closed_form(5, &s) == K3_OK);
    CHECK(take(s) == "444956673");
    CHECK(k3_appendix_genus_closed_form(4, &s) == K3_ERROR_DOMAIN);

    REQUIRE(k3_degeneracy_genus(9, 10, 24, &s) == K3_OK);
    CHECK(take(s) == "444956673");

    REQUIRE(k3_degeneracy_bracket_json(9, 10, 24, &s) == K3_OK);
    CHECK(take(s) ==
          "[{\"x\":0,\"theta\":1,\"coeff\":\"-5\"},{\"x\":1,\"theta\":0,\"coeff\":\"10\"}]");

    int match = 0;
    REQUIRE(k3_appendix_genus_crosscheck(5, &match) == K3_OK);
    CHECK(match == 1);
}

TEST_CASE("verify suites over the C surface") {
    k3_verify_result* result = nullptr;
    REQUIRE(k3_verify("qseries", 10, &result) == K3_OK);
    REQUIRE(k3_verify_count(result) > 0);
    CHECK(k3_verify_all_passed(result) == 1);
    for (size_t i = 0; i < k3_verify_count(result); ++i) {
        CHECK(std::strlen(k3_verify_name(result, i)) > 0);
        CHECK(k3_verify_passed(result, i) == 1);
        CHECK(std::strlen(k3_verify_detail(result, i)) > 0);
    }
    k3_verify_free(result);

    CHECK(k3_verify("nonsense", 0, &result) == K3_ERROR_INVALID_ARGUMENT);
    CHECK(k3_verify(nullptr, 0, &result) == K3_ERROR_INVALID_ARGUMENT);
}
