#include "repsplit/report.hpp"

#include <iomanip>
#include <sstream>

namespace repsplit {

std::string suborbit_lengths_line(const OrbitalBasis& b) {
    std::ostringstream os;
    bool first = true;
    int r = 0;
    while (r < b.rank) {
        int run = r;
        while (run < b.rank &&
               b.suborbit_lengths[static_cast<std::size_t>(run)] ==
                   b.suborbit_lengths[static_cast<std::size_t>(r)])
            ++run;
        int count = run - r;
        if (!first)
            os << ", ";
        first = false;
        Point len = b.suborbit_lengths[static_cast<std::size_t>(r)];
        if (count == 1) {
            os << len;
        } else if (count == 2 &&
                   b.transpose_of[static_cast<std::size_t>(r)] == r + 1) {
            os << len << ", " << len << "'";
        } else {
            os << len << "^" << count;
        }
        r = run;
    }
    return os.str();
}

std::string components_line(const Decomposition& dec) {
    std::ostringstream os;
    bool first = true;
    std::size_t i = 0;
    while (i < dec.projectors.size()) {
        const Projector& p = dec.projectors[i];
        if (!first)
            os << ", ";
        first = false;
        if (p.multiplicity_group >= 0) {
            std::size_t k = 0;
            while (i + k < dec.projectors.size() &&
                   dec.projectors[i + k].multiplicity_group == p.multiplicity_group)
                ++k;
            os << p.dimension << "^" << k;
            i += k;
            continue;
        }
        os << p.dimension;
        if (p.conjugate_of >= 0 && static_cast<std::size_t>(p.conjugate_of) < i)
            os << "~";
        ++i;
    }
    return os.str();
}

void print_orbital_block(std::ostream& os, const OrbitalBasis& b, const StructureConstants& sc) {
    os << "Rank: " << b.rank << "\n";
    os << "Dimension: " << b.degree << "\n";
    os << "Suborbit lengths: " << suborbit_lengths_line(b) << ".\n";
    if (sc.commutative) {
        os << "Centralizer ring is commutative\n";
        os << "=> permutation representation is multiplicity free\n";
    } else {
        os << "Centralizer ring is noncommutative\n";
        os << "=> permutation representation has multiple subrepresentations\n";
    }
}

void print_decomposition(std::ostream& os, const Decomposition& dec, const OrbitalBasis& basis) {
    (void)basis;
    os << "Decomposition: " << components_line(dec) << "\n";
    if (dec.field) {
        os << "Field: Q(a) with " << qpoly_str(dec.field->minpoly(), "a") << " = 0, a ~ ";
        Disk box = dec.field->root_box(8);
        os << decimal_str(box.re, 6);
        if (box.im != 0)
            os << (sgn(box.im) >= 0 ? " + " : " - ") << decimal_str(abs(box.im), 6) << "*i";
        os << "\n";
    } else {
        os << "Field: Q\n";
    }
    for (std::size_t m = 0; m < dec.projectors.size(); ++m) {
        const Projector& p = dec.projectors[m];
        os << "B[" << p.dimension;
        if (p.conjugate_of >= 0 && static_cast<std::size_t>(p.conjugate_of) < m)
            os << "~";
        os << "] =";
        for (std::size_t r = 0; r < p.coeff.size(); ++r)
            os << (r ? ", " : " ") << field_element_str(p.coeff[r]);
        if (p.multiplicity_group >= 0)
            os << "   (family " << p.multiplicity_group + 1 << ")";
        os << "\n";
    }
}

std::size_t memory_estimate_bytes(const OrbitalBasis& b, const StructureConstants& sc) {
    std::size_t total = 0;
    total += b.row1.size() * sizeof(int);
    total += b.transversal.parent.size() * (sizeof(Point) * 2 + sizeof(int));
    total += b.transversal.schreier.size() * b.degree * sizeof(Point);
    total += (b.transversal.gens.size() + b.transversal.inv_gens.size()) * b.degree * sizeof(Point);
    total += static_cast<std::size_t>(sc.rank) * sc.rank * sc.rank * sizeof(std::uint32_t);
    return total;
}

std::string format_bytes(std::size_t bytes) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(1);
    if (bytes >= (1ull << 30))
        os << static_cast<double>(bytes) / (1ull << 30) << " GB";
    else if (bytes >= (1ull << 20))
        os << static_cast<double>(bytes) / (1ull << 20) << " MB";
    else if (bytes >= (1ull << 10))
        os << static_cast<double>(bytes) / (1ull << 10) << " KB";
    else
        os << bytes << " B";
    return os.str();
}

} // namespace repsplit
