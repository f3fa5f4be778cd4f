#include "mirrormap/catalog.hpp"

namespace mirrormap {

namespace {

Poly ipoly(std::vector<long> coeffs) {
    std::vector<Rat> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.emplace_back(v);
    return Poly(std::move(c));
}

std::vector<Rat> rats(std::vector<long> v) {
    std::vector<Rat> out;
    out.reserve(v.size());
    for (long x : v) out.emplace_back(x);
    return out;
}

std::vector<Rat> fracs(std::vector<std::pair<long, long>> v) {
    std::vector<Rat> out;
    out.reserve(v.size());
    for (auto [n, d] : v) out.push_back(make_rat(n, d));
    return out;
}

CatalogEntry two_term_row(const std::string& key, std::vector<int> degrees,
                          std::vector<int> extra_dens, long w0, Rat printed_mu,
                          std::vector<Rat> printed_alpha, const std::string& family) {
    CatalogEntry e;
    CIModel ci;
    ci.degrees = std::move(degrees);
    ci.dim = 3;
    ci.extra_denominators = std::move(extra_dens);
    ci.w0 = Rat(w0);
    e.model.name = key;
    e.model.dim = 3;
    e.model.default_terms = 20;
    e.model.payload = std::move(ci);
    e.printed.mu = std::move(printed_mu);
    e.printed.alpha = std::move(printed_alpha);
    e.printed.w0 = Rat(w0);
    e.printed.family = family;
    return e;
}

CatalogEntry product_diagonal(const std::string& key, std::vector<int> factors,
                              std::vector<std::vector<int>> multidegree, long w0,
                              const std::string& family) {
    CatalogEntry e;
    ProductProjModel m;
    m.factor_dims = std::move(factors);
    m.multidegree = std::move(multidegree);
    m.w0 = Rat(w0);
    e.model.name = key;
    e.model.dim = 3;
    e.model.default_terms = 20;
    e.model.diagonal_weights = std::vector<int>(m.factor_dims.size(), 1);
    e.model.payload = std::move(m);
    e.printed.w0 = Rat(w0);
    e.printed.family = family;
    return e;
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> cat;

    // ---- hypersurfaces in weighted projective spaces ----
    {
        auto e = two_term_row("quintic", {5}, {}, 5, Rat(3125),
                              fracs({{1, 5}, {2, 5}, {3, 5}, {4, 5}}), "quintic hypersurface");
        // Theta^4 - 5z(5T+1)(5T+2)(5T+3)(5T+4)
        e.printed.op = RecurrenceSpec{
            {ipoly({-120, -1250, -4375, -6250, -3125}), ipoly({0, 0, 0, 0, 1})}, 4};
        cat.push_back(std::move(e));
    }
    cat.push_back(two_term_row("wp-6-21111", {6}, {2}, 3, Rat(23328),
                               fracs({{1, 6}, {2, 6}, {4, 6}, {5, 6}}), "one-parameter"));
    cat.push_back(two_term_row("wp-8-41111", {8}, {4}, 2, Rat(262144),
                               fracs({{1, 8}, {3, 8}, {5, 8}, {7, 8}}), "one-parameter"));
    cat.push_back(two_term_row("wp-10-52111", {10}, {2, 5}, 1, Rat(8000000),
                               fracs({{1, 10}, {3, 10}, {7, 10}, {9, 10}}), "one-parameter"));

    // ---- complete intersections in ordinary projective spaces ----
    cat.push_back(two_term_row("ci-33", {3, 3}, {}, 9, Rat(729),
                               fracs({{1, 3}, {1, 3}, {2, 3}, {2, 3}}), "one-parameter"));
    cat.push_back(two_term_row("ci-24", {2, 4}, {}, 8, Rat(1024),
                               fracs({{1, 4}, {2, 4}, {2, 4}, {3, 4}}), "one-parameter"));
    cat.push_back(two_term_row("ci-223", {2, 2, 3}, {}, 12, Rat(432),
                               fracs({{1, 3}, {1, 2}, {1, 2}, {2, 3}}), "one-parameter"));
    cat.push_back(two_term_row("ci-2222", {2, 2, 2, 2}, {}, 16, Rat(256),
                               fracs({{1, 4}, {1, 4}, {1, 4}, {1, 4}}), "one-parameter"));

    // ---- complete intersections in weighted projective spaces ----
    cat.push_back(two_term_row("wci-44", {4, 4}, {2, 2}, 4, Rat(4096),
                               fracs({{1, 4}, {1, 4}, {3, 4}, {3, 4}}), "one-parameter"));
    cat.push_back(two_term_row("wci-66", {6, 6}, {2, 2, 3, 3}, 1, Rat(186624),
                               fracs({{1, 6}, {1, 6}, {5, 6}, {5, 6}}), "one-parameter"));
    cat.push_back(two_term_row("wci-34", {3, 4}, {2}, 6, Rat(1728),
                               fracs({{1, 4}, {1, 3}, {2, 3}, {3, 4}}), "one-parameter"));
    cat.push_back(two_term_row("wci-26", {2, 6}, {3}, 4, Rat(6912),
                               fracs({{1, 6}, {1, 2}, {1, 2}, {5, 6}}), "one-parameter"));
    cat.push_back(two_term_row("wci-46", {4, 6}, {2, 2, 3}, 2, Rat(27648),
                               fracs({{1, 6}, {1, 4}, {3, 4}, {5, 6}}), "one-parameter"));

    // ---- the two-parameter P2 x P2 system ----
    {
        CatalogEntry e;
        ProductProjModel m;
        m.factor_dims = {2, 2};
        m.multidegree = {{3, 3}};
        m.w0 = Rat(18);
        e.model.name = "p2xp2";
        e.model.dim = 3;
        e.model.default_terms = 10;
        e.model.payload = std::move(m);
        e.printed.w0 = Rat(18);
        e.printed.family = "two-parameter system";
        cat.push_back(std::move(e));
    }

    // ---- diagonal one-parameter subfamilies of product models ----
    {
        auto e = product_diagonal("p2xp2-diagonal", {2, 2}, {{3, 3}}, 18, "diagonal subfamily");
        // Theta^4 - 3z(7T^2+7T+2)(3T+1)(3T+2) - 72z^2(3T+5)(3T+4)(3T+2)(3T+1)
        e.printed.op = RecurrenceSpec{{ipoly({-2880, -16848, -31752, -23328, -5832}),
                                       ipoly({-12, -96, -285, -378, -189}),
                                       ipoly({0, 0, 0, 0, 1})},
                                      4};
        e.printed.kq_head = rats({18, 378, 69498, 7724862, 1030043898, 132082090128});
        e.printed.n_head = rats({378});
        cat.push_back(std::move(e));
    }
    {
        auto e = product_diagonal("p1x4-diagonal", {1, 1, 1, 1}, {{2, 2, 2, 2}}, 48, "diagonal subfamily");
        // printed: Theta^4 - 4z(5T^2+5T+2)(2T+1) + 64z^2(2T+3)(2T+1)(2T+2)^2
        e.printed.op = RecurrenceSpec{{ipoly({768, 3584, 5888, 4096, 1024}),
                                       ipoly({-8, -36, -60, -40}),
                                       ipoly({0, 0, 0, 0, 1})},
                                      4};
        e.printed.w_closed_form = {ipoly({48}), ipoly({1, -80, 1024})};  // 48/((1-64z)(1-16z))
        e.printed.kq_head = rats({48, 192, 7872, 278400, 9445056, 315072192});
        e.printed.n_head = rats({192, 960, 10304, 147456, 2520576});
        cat.push_back(std::move(e));
    }
    {
        auto e = product_diagonal("p2cubed-111-diagonal", {2, 2, 2},
                                  {{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}, 90, "diagonal subfamily");
        // printed: 25T^4 - 15z(5+30T+72T^2+84T^3+51T^4) + 6z^2(15+155T+541T^2+828T^3+531T^4)
        //          - 54z^3(...) + 243z^4(402+1586T+2270T^2+1386T^3+279T^4) - 59049z^5(T+1)^4
        e.printed.op = RecurrenceSpec{{ipoly({-59049, -236196, -354294, -236196, -59049}),
                                       ipoly({97686, 385398, 551610, 336798, 67797}),
                                       ipoly({-63180, -204930, -237546, -116640, -22842}),
                                       ipoly({90, 930, 3246, 4968, 3186}),
                                       ipoly({-75, -450, -1080, -1260, -765}),
                                       ipoly({0, 0, 0, 0, 25})},
                                      4};
        e.printed.w_closed_form = {ipoly({90, 162}), ipoly({-1, 27, -27, 729})};
        e.printed.kq_head = rats({90, 108, 2916, 57456, 834084, 13743108});
        e.printed.n_head = rats({108, 351, 2124, 12987, 109944});
        cat.push_back(std::move(e));
    }
    {
        auto e = product_diagonal("p2cubed-abelian-diagonal", {2, 2, 2},
                                  {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}}, 162, "diagonal subfamily");
        // Theta^4 - 3z(6+29T+56T^2+54T^3+27T^4) + 81z^2(27T^2+54T+40)(T+1)^2
        //   - 2187z^3(3T+5)(3T+4)(T+2)(T+1)
        e.printed.op = RecurrenceSpec{{ipoly({-87480, -249318, -260253, -118098, -19683}),
                                       ipoly({3240, 10854, 14175, 8748, 2187}),
                                       ipoly({-18, -87, -168, -162, -81}),
                                       ipoly({0, 0, 0, 0, 1})},
                                      4};
        e.printed.kq_head = rats({162, 0, 0, 0, 0, 0});
        e.printed.n_head = rats({0, 0, 0, 0, 0});
        cat.push_back(std::move(e));
    }
    {
        auto e = product_diagonal("p3xp3-a-diagonal", {3, 3}, {{2, 2}, {1, 1}, {1, 1}}, 40, "diagonal subfamily");
        // printed bracket "(3T + T + 1)" is garbled in the source; no operator ref kept
        e.printed.w_closed_form = {ipoly({40}), ipoly({1, -48, -1024})};  // 40/((1+16z)(1-64z))
        e.printed.kq_head = rats({40, 160, 12640, 393280, 17420640, 662416160});
        e.printed.n_head = rats({160, 1560, 14560, 272000, 5299328});
        cat.push_back(std::move(e));
    }
    {
        auto e = product_diagonal("p3xp3-b-diagonal", {3, 3}, {{1, 1}, {1, 2}, {2, 1}}, 46, "diagonal subfamily");
        // 529T^4 - 23z(92+621T+1644T^2+2046T^3+921T^4) - z^2(221168+1033528T+1772673T^2+1328584T^3+380851T^4)
        //   - 2z^3(-27232+208932T+1028791T^2+1310172T^3+475861T^4)
        //   - 68z^4(-976-1664T+5139T^2+14020T^3+8873T^4) + 6936z^5(3T+4)(3T+2)(T+1)^2
        e.printed.op = RecurrenceSpec{{ipoly({55488, 235824, 367608, 249696, 62424}),
                                       ipoly({66368, 113152, -349452, -953360, -603364}),
                                       ipoly({54464, -417864, -2057582, -2620344, -951722}),
                                       ipoly({-221168, -1033528, -1772673, -1328584, -380851}),
                                       ipoly({-2116, -14283, -37812, -47058, -21183}),
                                       ipoly({0, 0, 0, 0, 529})},
                                      4};
        e.printed.w_closed_form = {ipoly({46, 68}), ipoly({1, -43, -595, 54})};
        e.printed.kq_head = rats({46, 160, 9416, 251530, 9120968, 289172660});
        e.printed.n_head = rats({160, 1157, 9310, 142368, 2313380});
        cat.push_back(std::move(e));
    }
    {
        auto e = product_diagonal("p3xp3-c-diagonal", {3, 3}, {{1, 1}, {3, 0}, {0, 3}}, 54, "diagonal subfamily");
        // T^4 - 3z(4+23T+53T^2+60T^3+48T^4) + 9z^2(304+1344T+2319T^2+1980T^3+873T^4)
        //   - 162z^3(800+3348T+5259T^2+3888T^3+1269T^4)
        //   + 2916z^4(688+2952T+4653T^2+3240T^3+891T^4) - 1417176z^5(3T+4)(3T+2)(T+1)^2
        e.printed.op = RecurrenceSpec{{ipoly({-11337408, -48183984, -75110328, -51018336, -12754584}),
                                       ipoly({2006208, 8608032, 13568148, 9447840, 2598156}),
                                       ipoly({-129600, -542376, -851958, -629856, -205578}),
                                       ipoly({2736, 12096, 20871, 17820, 7857}),
                                       ipoly({-12, -69, -159, -180, -144}),
                                       ipoly({0, 0, 0, 0, 1})},
                                      4};
        e.printed.w_closed_form = {ipoly({54, -972}), ipoly({1, -108, 3645, -39366})};
        e.printed.kq_head = rats({54, 162, 7290, 119232, 3045114, 79845912});
        e.printed.n_head = rats({162, 891, 4410, 47466, 638766});
        cat.push_back(std::move(e));
    }
    {
        auto e = product_diagonal("p4xp4-a-diagonal", {4, 4},
                                  {{2, 0}, {0, 2}, {1, 1}, {1, 1}, {1, 1}}, 80, "diagonal subfamily");
        // 25T^4 - 20z(5+30T+72T^2+84T^3+36T^4) - 16z^2(-35-70T+71T^2+268T^3+181T^4)
        //   + 256z^3(T+1)(165+375T+248T^2+37T^3) + 1024z^4(59+232T+331T^2+198T^3+39T^4)
        //   + 32768z^5(T+1)^4
        e.printed.op = RecurrenceSpec{{ipoly({32768, 131072, 196608, 131072, 32768}),
                                       ipoly({60416, 237568, 338944, 202752, 39936}),
                                       ipoly({42240, 138240, 159488, 72960, 9472}),
                                       ipoly({560, 1120, -1136, -4288, -2896}),
                                       ipoly({-100, -600, -1440, -1680, -720}),
                                       ipoly({0, 0, 0, 0, 25})},
                                      4};
        e.printed.w_closed_form = {ipoly({80, 128}), ipoly({1, -32, -16, 512})};
        e.printed.kq_head = rats({80, 128, 3776, 65792, 1299136, 23104128});
        e.printed.n_head = rats({128, 456, 2432, 20240, 184832});
        cat.push_back(std::move(e));
    }
    {
        auto e = product_diagonal("p4xp4-b-diagonal", {4, 4},
                                  {{1, 1}, {1, 1}, {1, 1}, {1, 1}, {1, 1}}, 70, "diagonal subfamily");
        // 49T^4 - 7z(14+91T+234T^2+286T^3+155T^4) - z^2(15736+66094T+102261T^2+680044T^3+16105T^4)
        //   + 8z^3(476+3759T+9071T^2+8589T^3+2625T^4) - 16z^4(184+806T+1439T^2+1266T^3+465T^4)
        //   + 512z^5(T+1)^4
        e.printed.op = RecurrenceSpec{{ipoly({512, 2048, 3072, 2048, 512}),
                                       ipoly({-2944, -12896, -23024, -20256, -7440}),
                                       ipoly({3808, 30072, 72568, 68712, 21000}),
                                       ipoly({-15736, -66094, -102261, -680044, -16105}),
                                       ipoly({-98, -637, -1638, -2002, -1085}),
                                       ipoly({0, 0, 0, 0, 49})},
                                      4};
        e.printed.w_closed_form = {ipoly({70, -40}), ipoly({1, -21, -353, 32})};
        e.printed.kq_head = rats({70, 100, 5300, 79750, 1966900, 37143850});
        e.printed.n_head = rats({100, 650, 2950, 30650, 297150});
        cat.push_back(std::move(e));
    }
    {
        auto e = product_diagonal("p4xp4-c-diagonal", {4, 4},
                                  {{2, 0}, {2, 0}, {0, 2}, {0, 2}, {1, 1}}, 96, "diagonal subfamily");
        // 9T^4 - 4z(6+33T+73T^2+80T^3+64T^4) + 128z^2(75+315T+527T^2+440T^3+194T^4)
        //   - 4096z^3(66+261T+397T^2+288T^3+94T^4) + 131072z^4(19+77T+117T^2+80T^3+22T^4)
        //   - 8388608z^5(T+1)^4
        e.printed.op = RecurrenceSpec{{ipoly({-8388608, -33554432, -50331648, -33554432, -8388608}),
                                       ipoly({2490368, 10092544, 15335424, 10485760, 2883584}),
                                       ipoly({-270336, -1069056, -1626112, -1179648, -385024}),
                                       ipoly({9600, 40320, 67456, 56320, 24832}),
                                       ipoly({-24, -132, -292, -320, -256}),
                                       ipoly({0, 0, 0, 0, 9})},
                                      4};
        e.printed.w_closed_form = {ipoly({96, -1024}), ipoly({1, -64, 1280, -8192})};
        e.printed.kq_head = rats({96, 128, 3456, 38144, 572800, 9344128});
        e.printed.n_head = rats({128, 416, 1408, 8896, 74752});
        cat.push_back(std::move(e));
    }
    return cat;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> cat = build_catalog();
    return cat;
}

const CatalogEntry* catalog_find(const std::string& key) {
    for (const auto& e : catalog())
        if (e.model.name == key) return &e;
    return nullptr;
}

std::vector<std::string> catalog_keys() {
    std::vector<std::string> keys;
    keys.reserve(catalog().size());
    for (const auto& e : catalog()) keys.push_back(e.model.name);
    return keys;
}

}  // namespace mirrormap
