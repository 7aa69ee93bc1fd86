;
;
;
;
