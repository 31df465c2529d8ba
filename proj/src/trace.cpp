#include <ergoloop/trace.hpp>

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace ergoloop {

namespace {

const char* kHeader =
    "t,alpha_s,alpha_c,beta_s,beta_t,gamma_b,gamma_t,"
    "score_upper,score_lower,score_wrist,score_twist,rula_arm,cause,"
    "tx,ty,tz,rot_z,wp_x,wp_y,wp_z,wp_yaw";

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

void Trace::push(TraceRecord r) {
  if (!records.empty() && !(r.t > records.back().t))
    throw std::invalid_argument("trace times must be monotone");
  records.push_back(std::move(r));
}

void Trace::validate() const {
  for (size_t i = 1; i < records.size(); ++i)
    if (!(records[i].t > records[i - 1].t))
      throw std::runtime_error("trace times not monotone");
}

void write_timeseries(const Trace& trace, std::ostream& out) {
  if (trace.records.empty()) throw std::invalid_argument("empty trace");
  out << kHeader << '\n';
  for (const TraceRecord& r : trace.records) {
    out << fmt(r.t) << ',' << fmt(r.angles.alpha_s) << ',' << fmt(r.angles.alpha_c) << ','
        << fmt(r.angles.beta_s) << ',' << fmt(r.angles.beta_t) << ','
        << fmt(r.angles.gamma_b) << ',' << fmt(r.angles.gamma_t) << ',' << r.scores.upper
        << ',' << r.scores.lower << ',' << r.scores.wrist << ',' << r.scores.twist << ','
        << r.scores.arm_score << ',';
    if (r.active_cause) out << cause_name(*r.active_cause);
    out << ',';
    if (r.command) {
      out << fmt(r.command->translation.x) << ',' << fmt(r.command->translation.y) << ','
          << fmt(r.command->translation.z) << ',' << fmt(r.command->rotation_z);
    } else {
      out << ",,,";
    }
    out << ',' << fmt(r.workpiece.position.x) << ',' << fmt(r.workpiece.position.y) << ','
        << fmt(r.workpiece.position.z) << ',' << fmt(r.workpiece.yaw) << '\n';
  }
}

void write_timeseries(const Trace& trace, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_timeseries(trace, out);
  if (!out.good()) throw std::runtime_error("write failed: " + path);
}

Trace read_timeseries(std::istream& in) {
  Trace trace;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty trace file");
  if (split_csv(line).size() != 21) throw std::runtime_error("unexpected trace header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto f = split_csv(line);
    if (f.size() != 21) throw std::runtime_error("bad trace row");
    TraceRecord r;
    r.t = std::stod(f[0]);
    r.angles.alpha_s = std::stod(f[1]);
    r.angles.alpha_c = std::stod(f[2]);
    r.angles.beta_s = std::stod(f[3]);
    r.angles.beta_t = std::stod(f[4]);
    r.angles.gamma_b = std::stod(f[5]);
    r.angles.gamma_t = std::stod(f[6]);
    r.scores.upper = std::stoi(f[7]);
    r.scores.lower = std::stoi(f[8]);
    r.scores.wrist = std::stoi(f[9]);
    r.scores.twist = std::stoi(f[10]);
    r.scores.arm_score = std::stoi(f[11]);
    if (!f[12].empty()) r.active_cause = cause_from_name(f[12]);
    if (!f[13].empty()) {
      ResponseCommand cmd;
      cmd.translation = {std::stod(f[13]), std::stod(f[14]), std::stod(f[15])};
      cmd.rotation_z = std::stod(f[16]);
      if (r.active_cause) cmd.cause.cause = *r.active_cause;
      r.command = cmd;
    }
    r.workpiece.position = {std::stod(f[17]), std::stod(f[18]), std::stod(f[19])};
    r.workpiece.yaw = std::stod(f[20]);
    trace.records.push_back(r);
  }
  trace.validate();
  return trace;
}

}  // namespace ergoloop
