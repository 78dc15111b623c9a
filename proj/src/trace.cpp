#include "agc/trace.hpp"

#include <charconv>
#include <map>
#include <stdexcept>

#include "agc/detail/sorted.hpp"
#include "agc/graph_io.hpp"

namespace agc {

std::string_view event_kind_name(EventKind k) {
  switch (k) {
    case EventKind::spawn:
      return "spawn";
    case EventKind::add_ref:
      return "add_ref";
    case EventKind::drop_ref:
      return "drop_ref";
    case EventKind::send:
      return "send";
    case EventKind::block:
      return "block";
    case EventKind::unblock:
      return "unblock";
    case EventKind::terminate:
      return "terminate";
  }
  throw std::logic_error("unhandled event kind");
}

std::optional<EventKind> event_kind_from_name(std::string_view name) {
  if (name == "spawn") return EventKind::spawn;
  if (name == "add_ref") return EventKind::add_ref;
  if (name == "drop_ref") return EventKind::drop_ref;
  if (name == "send") return EventKind::send;
  if (name == "block") return EventKind::block;
  if (name == "unblock") return EventKind::unblock;
  if (name == "terminate") return EventKind::terminate;
  return std::nullopt;
}

namespace {

bool takes_two_actors(EventKind k) {
  return k == EventKind::spawn || k == EventKind::add_ref || k == EventKind::drop_ref ||
         k == EventKind::send;
}

std::string id_str(ActorId a) { return std::to_string(a); }

}  // namespace

ReplayError::ReplayError(std::size_t step_, const std::string& msg)
    : std::runtime_error(step_ == 0 ? msg : "event " + std::to_string(step_) + ": " + msg),
      step(step_) {}

std::size_t apply_event(ActorGraph& g, const MutationEvent& ev, std::size_t step) {
  auto need = [&](ActorId x) {
    if (!g.has_actor(x)) throw ReplayError(step, "actor " + id_str(x) + " does not exist");
  };
  switch (ev.kind) {
    case EventKind::spawn:
      need(ev.a);
      if (g.has_actor(ev.b))
        throw ReplayError(step, "spawned actor " + id_str(ev.b) + " already exists");
      g.add_actor(ev.b);
      g.set_unblocked(ev.b, true);
      g.add_reference(ev.a, ev.b);
      return 2;
    case EventKind::add_ref:
      need(ev.a);
      need(ev.b);
      if (!g.add_reference(ev.a, ev.b))
        throw ReplayError(step,
                          "reference " + id_str(ev.a) + "->" + id_str(ev.b) + " already present");
      return 1;
    case EventKind::drop_ref:
      need(ev.a);
      need(ev.b);
      if (!g.drop_reference(ev.a, ev.b))
        throw ReplayError(step, "reference " + id_str(ev.a) + "->" + id_str(ev.b) + " not present");
      return 1;
    case EventKind::send:
      need(ev.a);
      need(ev.b);
      if (!g.is_unblocked(ev.a))
        throw ReplayError(step, "send from blocked actor " + id_str(ev.a));
      if (!g.has_reference(ev.a, ev.b))
        throw ReplayError(step,
                          "send without reference " + id_str(ev.a) + "->" + id_str(ev.b));
      g.set_unblocked(ev.b, true);
      return 1;
    case EventKind::block:
      need(ev.a);
      g.set_unblocked(ev.a, false);  // stays unblocked when a is a root
      return 1;
    case EventKind::unblock:
      need(ev.a);
      g.set_unblocked(ev.a, true);
      return 1;
    case EventKind::terminate: {
      need(ev.a);
      if (g.is_root(ev.a)) throw ReplayError(step, "terminate on root " + id_str(ev.a));
      std::size_t dropped =
          std::erase_if(g.references, [&](const ActorEdge& e) { return e.first == ev.a; });
      g.set_unblocked(ev.a, false);
      return 1 + dropped;
    }
  }
  throw std::logic_error("unhandled event kind");
}

std::map<ActorId, std::size_t> last_named_steps(const MutationTrace& trace) {
  std::map<ActorId, std::size_t> last_named;
  for (std::size_t i = 0; i < trace.events.size(); ++i) {
    const MutationEvent& ev = trace.events[i];
    last_named[ev.a] = i + 1;
    if (takes_two_actors(ev.kind)) last_named[ev.b] = i + 1;
  }
  return last_named;
}

ReplayReport replay(const MutationTrace& trace, std::size_t gc_every, Method method,
                    Strategy strategy) {
  std::map<ActorId, std::size_t> last_named = last_named_steps(trace);

  ReplayReport rep;
  rep.gc_every = gc_every;
  rep.method = method;
  rep.strategy = strategy;

  ActorGraph g = trace.initial;
  {
    auto errs = validate(g);
    if (!errs.empty()) throw ReplayError(0, "invalid initial graph: " + errs.front());
  }

  std::vector<ActorId> ever = g.actors;

  auto run_cycle = [&](std::size_t at_event) {
    CollectResult c = collect(g, method, strategy);
    GcCycleRecord rec;
    rec.at_event = at_event;
    rec.live = c.liveness.live.size();
    rec.collected = c.liveness.garbage;
    for (ActorId a : rec.collected) {
      auto it = last_named.find(a);
      if (it != last_named.end() && it->second > at_event)
        throw ReplayError(at_event, "actor " + id_str(a) + " collected but still named at event " +
                                        std::to_string(it->second));
      g.remove_actor(a);
    }
    for (ActorId a : rec.collected) detail::insert_sorted(rep.collected_total, a);
    rec.cumulative_collected = rep.collected_total.size();
    rec.surviving = g.actors.size();
    if (rec.cumulative_collected + rec.surviving != ever.size())
      throw ReplayError(at_event, "conservation mismatch: collected " +
                                      std::to_string(rec.cumulative_collected) + " + surviving " +
                                      std::to_string(rec.surviving) + " != " +
                                      std::to_string(ever.size()) + " seen");
    if (trace.expected_actor_total < ever.size())
      throw ReplayError(at_event, "trace exceeded its declared actor total");
    rec.not_yet_spawned = trace.expected_actor_total - ever.size();
    rec.gc_ops = c.transform.stats.output_nodes + c.transform.stats.output_edges + c.mark.ops +
                 rec.collected.size();
    rep.gc_ops += rec.gc_ops;
    rep.cycles.push_back(std::move(rec));
  };

  std::size_t step = 0;
  for (const MutationEvent& ev : trace.events) {
    ++step;
    if (ev.kind == EventKind::spawn && detail::contains(ever, ev.b))
      throw ReplayError(step, "spawn reuses id " + id_str(ev.b));
    rep.event_ops += apply_event(g, ev, step);
    if (ev.kind == EventKind::spawn) detail::insert_sorted(ever, ev.b);
    if (gc_every != 0 && step % gc_every == 0) run_cycle(step);
  }

  rep.events_applied = step;
  rep.distinct_actors = ever.size();
  if (trace.expected_actor_total != ever.size())
    throw ReplayError(0, "trace declared " + std::to_string(trace.expected_actor_total) +
                             " actors but " + std::to_string(ever.size()) + " existed");
  rep.final_graph = std::move(g);
  return rep;
}

ActorGraph trace_topology(const MutationTrace& trace) {
  ActorGraph t = trace.initial;
  for (const MutationEvent& ev : trace.events) {
    switch (ev.kind) {
      case EventKind::spawn:
        if (!t.has_actor(ev.b)) {
          t.add_actor(ev.b);
          t.set_unblocked(ev.b, true);
        }
        t.add_reference(ev.a, ev.b);
        break;
      case EventKind::add_ref:
        t.add_reference(ev.a, ev.b);
        break;
      default:
        break;  // removals and flag changes do not extend the union
    }
  }
  return t;
}

std::string serialize_trace(const MutationTrace& trace) {
  std::string out = serialize_graph(trace.initial);
  out += "expected_actors " + std::to_string(trace.expected_actor_total) + "\n";
  out += "events\n";
  for (std::size_t i = 0; i < trace.events.size(); ++i) {
    const MutationEvent& ev = trace.events[i];
    out += std::to_string(i + 1);
    out += ' ';
    out += event_kind_name(ev.kind);
    out += ' ';
    out += id_str(ev.a);
    if (takes_two_actors(ev.kind)) {
      out += ' ';
      out += id_str(ev.b);
    }
    out += '\n';
  }
  return out;
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::uint64_t parse_number(std::string_view tok, int line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line_no, "expected a number, got '" + std::string(tok) + "'");
  return value;
}

}  // namespace

MutationTrace parse_trace(std::string_view text) {
  // Split off the graph section at the expected_actors line; the head keeps
  // its own line numbering inside parse_graph.
  std::size_t pos = 0;
  int line_no = 0;
  std::size_t head_end = std::string_view::npos;
  int split_line = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    ++line_no;
    auto tokens = split_tokens(line);
    if (!tokens.empty() && tokens[0] == "expected_actors") {
      head_end = pos;
      split_line = line_no;
      break;
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  if (head_end == std::string_view::npos)
    throw ParseError(line_no + 1, "missing expected_actors line");

  MutationTrace trace;
  trace.initial = parse_graph(text.substr(0, head_end));

  line_no = split_line - 1;
  bool have_total = false;
  bool in_events = false;
  std::size_t next_step = 1;
  pos = head_end;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    ++line_no;

    auto tokens = split_tokens(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;

    if (!have_total) {
      if (tokens[0] != "expected_actors" || tokens.size() != 2)
        throw ParseError(line_no, "expected 'expected_actors <count>'");
      trace.expected_actor_total = parse_number(tokens[1], line_no);
      have_total = true;
      continue;
    }
    if (!in_events) {
      if (tokens.size() != 1 || tokens[0] != "events")
        throw ParseError(line_no, "expected 'events'");
      in_events = true;
      continue;
    }

    if (tokens.size() < 3) throw ParseError(line_no, "expected '<step> <kind> <actor> [<actor>]'");
    std::uint64_t step = parse_number(tokens[0], line_no);
    if (step != next_step)
      throw ParseError(line_no, "expected step " + std::to_string(next_step));
    ++next_step;

    auto kind = event_kind_from_name(tokens[1]);
    if (!kind) throw ParseError(line_no, "unknown event kind '" + std::string(tokens[1]) + "'");

    MutationEvent ev;
    ev.kind = *kind;
    std::size_t want = takes_two_actors(*kind) ? 4u : 3u;
    if (tokens.size() != want)
      throw ParseError(line_no, std::string(tokens[1]) + " takes " + std::to_string(want - 2) +
                                    (want == 3 ? " actor" : " actors"));
    ev.a = parse_number(tokens[2], line_no);
    if (want == 4) ev.b = parse_number(tokens[3], line_no);
    trace.events.push_back(ev);
  }
  if (!in_events) throw ParseError(line_no, "missing events line");
  return trace;
}

}  // namespace agc
