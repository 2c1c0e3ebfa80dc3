#include "saturn/kb_io.hpp"

#include <sstream>

namespace saturn
{

    namespace
    {
        void write_clause(std::ostream &out, const Clause &c)
        {
            out << to_string(c);
            if (c.confidence != 1)
                out << " : " << to_exact_string(c.confidence);
            if (c.is_taxonomy)
                out << " !taxonomy";
            out << '\n';
        }
    } // namespace

    std::string serialize_query_file(const QueryFile &file)
    {
        std::ostringstream out;
        out << "[kb]\n";
        for (const auto &c : file.kb)
            write_clause(out, c);
        if (!file.assumptions.empty())
        {
            out << "\n[assumptions]\n";
            for (const auto &c : file.assumptions)
                write_clause(out, c);
        }
        if (!file.similarities.empty())
        {
            out << "\n[similarity]\n";
            for (const auto &d : file.similarities)
                out << "similar " << d.symbol_a << ' ' << d.symbol_b << " : " << to_exact_string(d.strength) << '\n';
        }
        const auto &p = file.params;
        if (p.h || p.split || p.time || p.steps)
        {
            out << "\n[params]\n";
            if (p.h)
                out << "h = " << to_exact_string(*p.h) << '\n';
            if (p.split)
                out << "split = " << to_exact_string(*p.split) << '\n';
            if (p.time)
                out << "time = " << *p.time << '\n';
            if (p.steps)
                out << "steps = " << *p.steps << '\n';
        }
        out << "\n[question]\n"
            << to_string(file.question) << '\n';
        return out.str();
    }

} // namespace saturn
