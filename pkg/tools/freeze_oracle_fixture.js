#!/usr/bin/env node
// Regenerates tests/fixtures/english_oracle.json from an independent
// reference implementation of the rule set (npm package vader-sentiment).
//
//   npm install vader-sentiment
//   node tools/freeze_oracle_fixture.js tools/oracle_sentences.txt \
//     > tests/fixtures/english_oracle.json

const fs = require('fs');
const vader = require('vader-sentiment');

const lines = fs
  .readFileSync(process.argv[2], 'utf-8')
  .split('\n')
  .filter(line => line.trim().length > 0);

const rows = lines.map(text => {
  const scores = vader.SentimentIntensityAnalyzer.polarity_scores(text);
  return {text, compound: scores.compound};
});

process.stdout.write(JSON.stringify(rows, null, 1) + '\n');
