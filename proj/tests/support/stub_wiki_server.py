#!/usr/bin/env python3
"""Minimal MediaWiki Action API stand-in for driving the CLI end to end.

Serves three query flavors on /w/api.php: paged revision histories
(prop=revisions with rvcontinue), latest-revision content (rvprop=content),
and list=random. Articles are synthetic and deterministic.

Usage: stub_wiki_server.py [port]   (prints the chosen port on stdout)
"""
import json
import sys
from http.server import BaseHTTPRequestHandler, HTTPServer
from urllib.parse import parse_qs, urlparse

PAGE_SIZE = 500


def quarter_edits(editor, quarter, count, start_id):
    year = 2005 + quarter // 4
    month = (quarter % 4) * 3 + 1
    revs = []
    for i in range(count):
        ts = "%04d-%02d-%02dT%02d:%02d:00Z" % (year, month, 1 + i % 27, (i // 27) % 24, i % 60)
        revs.append({"revid": start_id + i, "parentid": start_id + i - 1,
                     "user": editor, "timestamp": ts})
    return revs


def build_articles():
    articles = {}

    revs = []
    next_id = 1
    for q, c in enumerate([10, 8, 9, 7, 6, 5, 4, 3]):
        revs += quarter_edits("Ajd", q, c, next_id)
        next_id += c
    for q, c in enumerate([5, 4, 5, 4, 3, 3, 2, 2]):
        revs += quarter_edits("Loodog", q, c, next_id)
        next_id += c
    revs += quarter_edits("Atlant", 2, 30, next_id)
    articles["Boston-like"] = {"revisions": sorted(revs, key=lambda r: (r["timestamp"], r["revid"])),
                               "wikitext": "x" * 4000}

    revs = []
    next_id = 100000
    for q, c in enumerate([3, 1, 3, 1, 3, 1]):
        revs += quarter_edits("Alpha", q, c, next_id)
        next_id += c
    for q, c in enumerate([1, 3, 1, 3, 1, 3]):
        revs += quarter_edits("Beta", q, c, next_id)
        next_id += c
    articles["Dueling"] = {"revisions": sorted(revs, key=lambda r: (r["timestamp"], r["revid"])),
                           "wikitext": "y" * 4000}

    revs = quarter_edits("OneHitWonder", 0, 3, 500000)
    articles["Tiny stub"] = {"revisions": revs, "wikitext": "{{city-stub}} tiny"}
    return articles


ARTICLES = build_articles()
RANDOM_TITLES = ["Boston-like", "Dueling", "Tiny stub"]


class Handler(BaseHTTPRequestHandler):
    def log_message(self, *args):
        pass

    def reply(self, payload):
        body = json.dumps(payload).encode()
        self.send_response(200)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def do_GET(self):
        url = urlparse(self.path)
        q = {k: v[0] for k, v in parse_qs(url.query).items()}
        if url.path != "/w/api.php" or q.get("action") != "query":
            self.reply({"error": {"code": "badaction", "info": "unsupported"}})
            return
        if q.get("list") == "random":
            limit = int(q.get("rnlimit", "10"))
            entries = [{"id": i, "ns": 0, "title": t}
                       for i, t in enumerate(RANDOM_TITLES[:limit])]
            self.reply({"batchcomplete": True, "query": {"random": entries}})
            return
        title = q.get("titles", "")
        article = ARTICLES.get(title)
        if article is None:
            self.reply({"batchcomplete": True,
                        "query": {"pages": [{"ns": 0, "title": title, "missing": True}]}})
            return
        if "content" in q.get("rvprop", ""):
            text = article["wikitext"]
            rev = {"size": len(text), "slots": {"main": {"contentmodel": "wikitext",
                                                         "content": text}}}
            self.reply({"batchcomplete": True,
                        "query": {"pages": [{"pageid": 1, "ns": 0, "title": title,
                                             "revisions": [rev]}]}})
            return
        start = int(q.get("rvcontinue", "0"))
        revs = article["revisions"][start:start + PAGE_SIZE]
        payload = {"batchcomplete": start + PAGE_SIZE >= len(article["revisions"]),
                   "query": {"pages": [{"pageid": 1, "ns": 0, "title": title,
                                        "revisions": revs}]}}
        if start + PAGE_SIZE < len(article["revisions"]):
            payload["continue"] = {"rvcontinue": str(start + PAGE_SIZE), "continue": "||"}
        self.reply(payload)


def main():
    port = int(sys.argv[1]) if len(sys.argv) > 1 else 0
    server = HTTPServer(("127.0.0.1", port), Handler)
    print(server.server_address[1], flush=True)
    server.serve_forever()


if __name__ == "__main__":
    main()
