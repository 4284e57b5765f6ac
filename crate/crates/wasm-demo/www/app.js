import init, { Dashboard } from './pkg/rtvis_wasm.js';

const SVG = 'http://www.w3.org/2000/svg';
const COLORS = ['#4e79a7', '#f28e2b', '#e15759', '#76b7b2', '#59a14f', '#edc948', '#b07aa1', '#ff9da7', '#9c755f'];
const $ = (id) => document.getElementById(id);

let dash = null;
let river = null;
let range = null;
let race = { frames: [], index: 0, timer: null };

function el(name, attrs, parent) {
  const node = document.createElementNS(SVG, name);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  if (parent) parent.appendChild(node);
  return node;
}

function clear(svg) {
  while (svg.firstChild) svg.removeChild(svg.firstChild);
}

function bucketStart(id) {
  return id.length === 4 ? `${id}-01-01` : `${id}-01`;
}

function bucketEnd(id) {
  if (id.length === 4) return `${id}-12-31`;
  const [y, m] = id.split('-').map(Number);
  const last = new Date(Date.UTC(y, m, 0)).getUTCDate();
  return `${id}-${String(last).padStart(2, '0')}`;
}

function load() {
  $('status').textContent = '';
  try {
    dash = new Dashboard($('corpus').value, $('format').value);
  } catch (e) {
    $('status').textContent = String(e);
    return;
  }
  const summary = JSON.parse(dash.summary());
  $('summary').textContent = `${summary.paper_count} papers, ${summary.issues.length} issues`;
  river = JSON.parse(dash.themeRiver($('granularity').value));
  range = summary.date_min ? { from: summary.date_min, to: summary.date_max } : null;
  drawRiver();
  refresh();
}

function drawRiver() {
  const svg = $('river');
  clear(svg);
  const w = +svg.getAttribute('width');
  const h = +svg.getAttribute('height');
  const n = river.buckets.length;
  if (n === 0) return;
  const lo = Math.min(...river.baseline);
  const hi = Math.max(...river.baseline.map((b) => -b));
  const span = hi - lo || 1;
  const x = (i) => (n === 1 ? w / 2 : 30 + (i * (w - 60)) / (n - 1));
  const y = (v) => h - 20 - ((v - lo) / span) * (h - 40);

  river.order.forEach((field, f) => {
    const bands = river.bands[field];
    const top = bands.map((b, i) => `${x(i)},${y(b[1])}`);
    const bottom = bands.map((b, i) => `${x(i)},${y(b[0])}`).reverse();
    const poly = el('polygon', { points: [...top, ...bottom].join(' '), fill: COLORS[f % COLORS.length], opacity: 0.85 }, svg);
    el('title', {}, poly).textContent = `${field}: ${river.counts[field].join(', ')}`;
  });
  river.buckets.forEach((b, i) => {
    el('text', { x: x(i), y: h - 4, 'text-anchor': 'middle', 'font-size': 11 }, svg).textContent = b;
  });

  const brush = el('rect', { class: 'brush', x: 0, y: 0, width: 0, height: h, visibility: 'hidden' }, svg);
  const nearest = (px) => {
    let best = 0;
    for (let i = 1; i < n; i++) if (Math.abs(x(i) - px) < Math.abs(x(best) - px)) best = i;
    return best;
  };
  let start = null;
  svg.onmousedown = (ev) => {
    start = ev.offsetX;
    brush.setAttribute('visibility', 'visible');
  };
  svg.onmousemove = (ev) => {
    if (start === null) return;
    brush.setAttribute('x', Math.min(start, ev.offsetX));
    brush.setAttribute('width', Math.abs(ev.offsetX - start));
  };
  // commit on release only: one refetch burst per gesture
  svg.onmouseup = (ev) => {
    if (start === null) return;
    const [a, b] = [nearest(start), nearest(ev.offsetX)].sort((p, q) => p - q);
    start = null;
    const next = { from: bucketStart(river.buckets[a]), to: bucketEnd(river.buckets[b]) };
    if (range && next.from === range.from && next.to === range.to) return;
    range = next;
    refresh();
  };
}

function refresh() {
  $('range').textContent = range ? `${range.from} .. ${range.to}` : '(empty corpus)';
  if (!range) return;
  try {
    drawNetwork(JSON.parse(dash.coauthors(range.from, range.to, Math.max(1, +$('n').value))));
    startRace(JSON.parse(dash.wordRace(range.from, range.to, Math.max(1, +$('k').value), $('mode').value, $('granularity').value)));
    $('status').textContent = '';
  } catch (e) {
    $('status').textContent = String(e);
  }
}

function hash(s) {
  let h = 2166136261;
  for (const c of s) h = Math.imul(h ^ c.codePointAt(0), 16777619);
  return (h >>> 0) / 4294967296;
}

// Small force-directed layout seeded from author-name hashes so reloads are stable.
function layout(graph, w, h) {
  const pos = new Map(graph.nodes.map((n) => [n.name, { x: w * (0.2 + 0.6 * hash(n.name)), y: h * (0.2 + 0.6 * hash(n.name + '#')) }]));
  for (let iter = 0; iter < 300; iter++) {
    const force = new Map(graph.nodes.map((n) => [n.name, { x: 0, y: 0 }]));
    for (const a of graph.nodes) {
      for (const b of graph.nodes) {
        if (a === b) continue;
        const pa = pos.get(a.name), pb = pos.get(b.name);
        const dx = pa.x - pb.x, dy = pa.y - pb.y;
        const d2 = Math.max(dx * dx + dy * dy, 1);
        force.get(a.name).x += (800 * dx) / d2;
        force.get(a.name).y += (800 * dy) / d2;
      }
    }
    for (const e of graph.edges) {
      const pa = pos.get(e.source), pb = pos.get(e.target);
      const dx = pb.x - pa.x, dy = pb.y - pa.y;
      const k = 0.02 * Math.min(e.weight, 4);
      force.get(e.source).x += k * dx; force.get(e.source).y += k * dy;
      force.get(e.target).x -= k * dx; force.get(e.target).y -= k * dy;
    }
    for (const n of graph.nodes) {
      const p = pos.get(n.name), f = force.get(n.name);
      p.x = Math.min(w - 20, Math.max(20, p.x + 0.1 * f.x + 0.01 * (w / 2 - p.x)));
      p.y = Math.min(h - 20, Math.max(20, p.y + 0.1 * f.y + 0.01 * (h / 2 - p.y)));
    }
  }
  return pos;
}

function drawNetwork(graph) {
  const svg = $('network');
  clear(svg);
  const pos = layout(graph, +svg.getAttribute('width'), +svg.getAttribute('height'));
  for (const e of graph.edges) {
    const a = pos.get(e.source), b = pos.get(e.target);
    el('line', { x1: a.x, y1: a.y, x2: b.x, y2: b.y, stroke: '#999', 'stroke-width': e.weight }, svg);
  }
  for (const n of graph.nodes) {
    const p = pos.get(n.name);
    const c = el('circle', { cx: p.x, cy: p.y, r: 4 + 3 * Math.sqrt(n.weighted_degree), fill: '#4e79a7' }, svg);
    c.onmouseenter = () => {
      $('hover').textContent = `${n.name}: ${n.collaborator_count} collaborators, weighted degree ${n.weighted_degree}`;
    };
    el('text', { x: p.x + 8, y: p.y - 8, 'font-size': 11 }, svg).textContent = n.name;
  }
}

function startRace(series) {
  clearInterval(race.timer);
  race = { frames: series.frames, index: 0, timer: null };
  $('play').textContent = 'Play';
  drawFrame();
}

function drawFrame() {
  const svg = $('race');
  clear(svg);
  const frame = race.frames[race.index];
  if (!frame) return;
  const w = +svg.getAttribute('width');
  const max = Math.max(1, ...race.frames.flatMap((f) => f.entries.map((e) => e.count)));
  const barH = Math.min(28, (+svg.getAttribute('height') - 40) / Math.max(1, frame.entries.length));
  frame.entries.forEach((e, i) => {
    const len = ((w - 140) * e.count) / max;
    el('rect', { x: 90, y: 10 + i * barH, width: len, height: barH - 4, fill: COLORS[i % COLORS.length] }, svg);
    el('text', { x: 85, y: 10 + i * barH + barH / 2 + 2, 'text-anchor': 'end', 'font-size': 12 }, svg).textContent = e.word;
    el('text', { x: 95 + len, y: 10 + i * barH + barH / 2 + 2, 'font-size': 11 }, svg).textContent = e.count;
  });
  el('text', { x: w - 10, y: +svg.getAttribute('height') - 10, 'text-anchor': 'end', 'font-size': 20, fill: '#888' }, svg).textContent = frame.bucket;
}

$('play').onclick = () => {
  if (race.timer) {
    clearInterval(race.timer);
    race.timer = null;
    $('play').textContent = 'Play';
    return;
  }
  $('play').textContent = 'Pause';
  race.timer = setInterval(() => {
    race.index = (race.index + 1) % Math.max(1, race.frames.length);
    drawFrame();
  }, 800);
};

$('load').onclick = load;
$('granularity').onchange = load;
$('n').onchange = refresh;
$('k').onchange = refresh;
$('mode').onchange = refresh;

init().then(load);
