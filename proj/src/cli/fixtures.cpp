#include "ktower/cli/fixtures.hpp"

namespace ktower::fixtures {

const Fixture& example1() {
    static const Fixture f = [] {
        Fixture x;
        x.id = "example1";
        x.ell = 5;
        x.p = 3;
        x.N = 2;
        x.d = 1;
        x.m = 2;
        x.family = GammaFamily::Abelian;
        x.base_conductor = 3;
        x.expected_prime_list = {"2",   "5",   "11",  "17",  "23",  "29",  "41",  "47",  "53",  "59",  "71",
                                 "83",  "89",  "101", "107", "113", "131", "137", "149", "167", "173", "179",
                                 "191", "197", "227", "233", "239", "251", "257", "263", "269", "281", "293",
                                 "311", "317", "347", "353", "359", "383", "389", "401", "419"};
        x.expected_alpha =
            "55648213008781695672667810384702204705472968298668180461428"
            "1048399478905195501007583867510";
        x.printed_t = 42;
        x.printed_t_text = "t = N + 2dℓ(ℓ−1) = 42";
        x.variety_label = "11a1";
        x.variety_bad_primes = {11};
        x.printed_class_coefficient = 2;
        x.printed_class_base = 3;
        return x;
    }();
    return f;
}

const Fixture& example2() {
    static const Fixture f = [] {
        Fixture x;
        x.id = "example2";
        x.ell = 5;
        x.p = 3;
        x.N = 10;
        x.d = 3;
        x.m = 2;
        x.family = GammaFamily::Abelian;
        x.base_conductor = 9;
        x.expected_prime_list = {
            "2",    "5",    "11",   "23",   "29",   "41",   "47",   "59",   "83",   "101",  "113",  "131",  "137",
            "149",  "167",  "173",  "191",  "227",  "239",  "257",  "263",  "281",  "293",  "311",  "317",  "347",
            "353",  "383",  "389",  "401",  "419",  "443",  "461",  "479",  "491",  "509",  "563",  "569",  "587",
            "599",  "617",  "641",  "653",  "659",  "677",  "743",  "761",  "797",  "821",  "839",  "857",  "887",
            "911",  "929",  "941",  "947",  "977",  "983",  "1013", "1019", "1031", "1049", "1091", "1103", "1109",
            "1163", "1181", "1193", "1217", "1229", "1283", "1289", "1301", "1307", "1319", "1361", "1373", "1409",
            "1427", "1433", "1451", "1481", "1487", "1499", "1523", "1553", "1559", "1571", "1607", "1613"};
        x.expected_alpha =
            "30266915671908567712011058723234542844654746560977147126408783068722197382"
            "3946203120683121105279988012699117394"
            "2884749088584144432870913089663861679"
            "02242957859532761609270923483095428112544069874627622945451584053107032901"
            "3191741865236750170";
        x.printed_t = 90;
        x.printed_t_text = "t = N + 2dℓ(ℓ−1) = 90";
        x.variety_label = "11a1";
        x.variety_bad_primes = {11};
        x.printed_class_coefficient = 10;
        x.printed_class_base = 3;
        x.printed_extension_dimension = 2;
        return x;
    }();
    return f;
}

const Fixture& example3() {
    static const Fixture f = [] {
        Fixture x;
        x.id = "example3";
        x.ell = 3;
        x.p = 7;
        x.N = 6;
        x.d = 3;
        x.m = 3;
        x.family = GammaFamily::Nilpotent;
        x.s = 1;
        x.base_conductor = 7;
        x.relative_poly = "x^3 - x^2 - 4x - 1";
        AssumptionChecklist c;
        c.m = 3;
        c.base_field_desc = "F_0 = Q(ζ_7), F = F_0(θ), θ^3 - θ^2 - 4θ - 1 = 0";
        c.f0_totally_imaginary = true;
        c.contains_mu_p = true;
        c.unique_prime_above_p = true;
        c.p_part_of_p_class_group_trivial = true;
        c.provenance = Provenance::ExternalDatabase;
        x.checklist = c;
        x.expected_prime_list = {"43", "127", "491", "673", "953", "1499", "1583", "2129", "2311", "2591"};
        x.expected_alpha =
            "78402503779216655405023576089116738265320606062683342998991230977"
            "29859436684020023921188941416161094578321474807227626638759156142079702"
            "108239313497652801991067685041337071171617321114788409671453358754013644971";
        x.printed_t = 60;
        x.printed_t_text = "t = N + mdℓ(ℓ−1) = 6 + 3·3·3·2 = 60";
        x.variety_label = "19a1";
        x.variety_bad_primes = {19};
        x.printed_class_coefficient = 6;
        x.printed_class_base = 3;
        x.factored_prime = 43;
        x.factors = {"ζ₇⁵ + 2ζ₇³ + ζ₇² + 1",
                     "ζ₇⁵ + ζ₇⁴ + 2ζ₇² + ζ₇",
                     "2ζ₇⁵ + ζ₇⁴ + 2ζ₇³ + ζ₇² + 2ζ₇ + 1",
                     "−2ζ₇⁵ − ζ₇⁴ − ζ₇³ − 2ζ₇² − 2ζ₇ − 1",
                     "2ζ₇⁴ + ζ₇³ + ζ₇² + ζ₇",
                     "ζ₇⁵ + ζ₇⁴ + ζ₇³ + 2ζ₇²"};
        x.class_number = 13;
        x.places_per_prime = 6;
        return x;
    }();
    return f;
}

const std::vector<const Fixture*>& all() {
    static const std::vector<const Fixture*> list = {&example1(), &example2(), &example3()};
    return list;
}

const Fixture* find(std::string_view id) {
    for (const Fixture* f : all()) {
        if (f->id == id) return f;
    }
    return nullptr;
}

}  // namespace ktower::fixtures
