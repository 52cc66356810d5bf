// regenerates the computed fixture files
#include <fstream>
#include <cstdio>
#include "growth/enumerate.hpp"
#include "growth/oracle.hpp"
#include "growth/twigs.hpp"
using namespace growth;
int main() {
    {
        std::ofstream out("data/reference/weights_2d.json");
        out << "{\n  \"format\": 1,\n  \"levels\": [\n";
        for (int i = 1; i <= 12; ++i) {
            WeightSum w = build_weight_sum(2, i, 0);
            out << "    {\"i\": " << i << ", \"terms\": [";
            bool first = true;
            for (const auto& [m, c] : w.weights.terms()) {
                out << (first ? "" : ", ") << "{\"x\": " << m.x << ", \"y\": " << m.y
                    << ", \"c\": \"" << c.get_str() << "\"}";
                first = false;
            }
            out << "]}" << (i < 12 ? "," : "") << "\n";
        }
        out << "  ]\n}\n";
    }
    {
        auto census = closed_twig_census(2, 8);
        std::ofstream out("data/reference/closed_2d.csv");
        out << "k,count\n";
        for (auto& [k, c] : census) out << k << "," << c.get_str() << "\n";
    }
    {
        auto census = closed_twig_census(3, 6);
        std::ofstream out("data/reference/closed_3d.csv");
        out << "k,count\n";
        for (auto& [k, c] : census) out << k << "," << c.get_str() << "\n";
    }
    {
        auto seq = sequence_from_string<2>("L5 L4 L3 L5 L1 L1 L2 L1 L4 L1");
        Animal<2> p = decode_twigs<2>(seq);
        std::ofstream out("data/reference/animal_10cell.txt");
        write_animal<2>(out, p);
        std::printf("10-cell re-encode ok: %d\n", (int)(encode_twigs<2>(p) == seq));
    }
    {
        CountTable t = count_fixed<2>(12);
        std::ofstream out("data/oracle/a2.csv");
        out << "n,count\n";
        for (int n = 1; n <= 12; ++n) out << n << "," << t.at(n).get_str() << "\n";
    }
    {
        CountTable t = count_fixed<3>(8);
        std::ofstream out("data/oracle/a3.csv");
        out << "n,count\n";
        for (int n = 1; n <= 8; ++n) out << n << "," << t.at(n).get_str() << "\n";
    }
    std::printf("fixtures written\n");
    return 0;
}
