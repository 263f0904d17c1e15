/**
 * Pure HTML-string rendering of view models.  Keeping this stringly pure
 * lets the tests assert on rendered output without a DOM.
 */

import type { AnalyzeResponse, MethodRecord } from './api.js';
import type { MethodRow } from './viewmodel.js';
import { allUndetermined, combinedRow, coverageNote, methodRows } from './viewmodel.js';
import type { PlaygroundState } from './playground.js';

export function escapeHtml(text: string): string {
	return text
		.replace(/&/g, '&amp;')
		.replace(/</g, '&lt;')
		.replace(/>/g, '&gt;')
		.replace(/"/g, '&quot;')
		.replace(/'/g, '&#39;');
}

function rowHtml(row: MethodRow, pinned = false): string {
	const width = Math.round(row.barFraction * 100);
	const classes = ['verdict-row', `polarity-${row.polarity}`];
	if (pinned) classes.push('pinned');
	const bar =
		row.polarity === 'undetermined'
			? '<span class="no-verdict">not covered</span>'
			: `<span class="bar" style="width: ${width}%"></span>`;
	return (
		`<div class="${classes.join(' ')}" data-method="${escapeHtml(row.method)}" ` +
		`data-polarity="${escapeHtml(row.polarity)}">` +
		`<span class="method-name">${escapeHtml(row.method)}</span>` +
		`<span class="track">${bar}</span>` +
		`<span class="polarity-label">${escapeHtml(row.polarity)}</span>` +
		`<span class="score">${escapeHtml(row.scoreLabel)}</span>` +
		`</div>`
	);
}

export function renderAnalysis(
	response: AnalyzeResponse,
	label?: string,
): string {
	const pieces: string[] = [];
	if (label) {
		pieces.push(`<h3 class="strategy-label">${escapeHtml(label)}</h3>`);
	}
	const note = coverageNote(response);
	const combined = combinedRow(response);
	if (combined) {
		pieces.push(rowHtml(combined, true));
	}
	if (allUndetermined(response)) {
		pieces.push('<p class="empty-state">no method covered this text</p>');
	}
	for (const row of methodRows(response)) {
		pieces.push(rowHtml(row));
	}
	pieces.push(
		`<p class="coverage-note">covered by <span class="covered-count">${note.covered}</span>` +
			` of ${note.total} methods &middot; ${response.elapsed_ms.toFixed(1)} ms</p>`,
	);
	return pieces.join('\n');
}

export function renderError(code: string, message: string): string {
	return (
		`<div class="error-banner" data-code="${escapeHtml(code)}">` +
		`${escapeHtml(message)}</div>`
	);
}

export function renderToggles(methods: MethodRecord[], state: PlaygroundState): string {
	return methods
		.map((method) => {
			const disabled = method.lexicon_loaded ? '' : ' disabled';
			const checked = state.enabled.has(method.id) ? ' checked' : '';
			const title = escapeHtml(method.description);
			return (
				`<label class="method-toggle" title="${title}">` +
				`<input type="checkbox" data-method="${escapeHtml(method.id)}"${checked}${disabled}>` +
				`${escapeHtml(method.id)}${method.lexicon_loaded ? '' : ' (no lexicon)'}` +
				`</label>`
			);
		})
		.join('\n');
}
