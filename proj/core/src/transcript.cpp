#include "pezzo/transcript.hpp"

namespace pezzo {

const std::vector<TranscriptEntry>& paper_transcript() {
  static const std::vector<TranscriptEntry> table = [] {
    std::vector<TranscriptEntry> t;

    // ---- quintic 5-fold section, Lambda chart with a..d in column 2 ----
    t.push_back({"y5", 2, "01,02,12", "s22", "sec. 3.2", true, {}, {}, {}});
    t.push_back({"y5", 2, "01,03,13", "s22", "sec. 3.2", false,
                 {"-a-e+c*f", "-h+c*i", "-k+c*l+d"},
                 {"g", "i", "k", "f+j", "e-m", "h-l"},
                 {"g", "i", "k", "f+j", "e-m", "h", "l", "d", "-f*c+e+a"}});
    t.push_back({"y5", 2, "02,03,23", "s22", "sec. 3.2", false,
                 // third generator is a suspected misprint (d*l for c*l)
                 {"-a*e+c*f+d*g-1", "-a*h+c*i+d*j", "-a*k+d*l+d*m"},
                 {"g", "i", "k", "f-j", "e-m", "h+l"},
                 {"g", "i", "k", "f-j", "e-m", "h", "l", "d", "f*c-1-e*a"}});
    t.push_back({"y5", 2, "12,13,23", "s22", "sec. 3.2", false,
                 {"-a*e+c-f", "-a*h+d-i", "-a*k-l"},
                 {"g", "i", "k", "f-j", "e+m", "h-l"},
                 {"g", "i", "k", "f-j", "e+m", "h", "l", "d", "c-f-a*e"}});
    t.push_back({"y5", 2, "01,12,13", "s31", "sec. 3.2", false,
                 {"-a-e", "c-h", "d-k"},
                 {"f+j", "e-m", "h-l", "g", "i", "k"},
                 {"f+j", "e-m", "e+a", "h-l", "c-h", "g", "i", "k", "d"}});
    t.push_back({"y5", 2, "03,13,23", "s31", "sec. 3.2", false,
                 // first generator is a suspected misprint (e*g for c*g)
                 {"-a*e-f+e*g", "-a*h-i+c*j+d", "-a*k-l+c*m"},
                 {"f-j", "h-l", "e+m", "g", "i", "k"},
                 {"f-j", "h-l", "e+m", "g", "i", "k", "f+e*a", "l-c*m", "d"}});

    // ---- quintic 4-fold section, same Lambda chart ----
    t.push_back({"y4", 2, "03,13,23", "s31", "sec. 3.4", false,
                 {"-a*e-f+c*g", "-a*h-i+c*j+d", "-a*k-l+c*m", "-a+g", "j-b",
                  "m-c"},
                 {"f-j", "e+m", "h-l", "g", "i", "k"},
                 {"a", "b", "d", "g", "i", "k", "f", "j", "e+m", "h-l",
                  "h-c^2", "e+c"}});
    t.push_back({"y4", 2, "01,02,12", "s22", "sec. 3.4", true, {}, {}, {}});
    t.push_back({"y4", 2, "01,03,13", "s22", "sec. 3.4", true, {}, {}, {}});
    t.push_back({"y4", 2, "12,13,23", "s22", "sec. 3.4", true, {}, {}, {}});

    // ---- quintic 4-fold section, Lambda chart with a..d in column 3 ----
    t.push_back({"y4", 3, "01,02,03", "s31", "sec. 3.4", false,
                 {"-b+e", "-c+h", "-d+k", "-a+c*e+d*f-g", "c*h+d*i-j",
                  "c*k+d*l-m"},
                 {"g", "i", "k", "f-j", "h-l", "e+m"},
                 {"a", "b", "d", "g", "i", "k", "e", "m", "h-l", "f-j", "h-c",
                  "f-c^2"}});

    return t;
  }();
  return table;
}

const TranscriptEntry* find_transcript(const std::string& variety, int lambda,
                                       const std::string& fchart,
                                       const std::string& ptype) {
  for (const auto& e : paper_transcript())
    if (e.variety == variety && e.lambda == lambda && e.fchart == fchart &&
        e.ptype == ptype)
      return &e;
  return nullptr;
}

}  // namespace pezzo
